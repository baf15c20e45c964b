from setuptools import setup

setup(
    name='hurwitzcalc',
    version='1.0',
    description='Degrees of multigraded Hurwitz and Chow forms of complete intersections and toric varieties',
    packages=['hurwitzcalc', 'components', ],
    package_data={
        'components': ['templates/report.html']
    },
    install_requires=['numpy==2.1.3', 'sympy==1.13.3', 'pathvalidate==3.2.1', 'Jinja2==3.1.4', 'colorlog==6.8.2',
                      'Pygments==2.18.0'],
    python_requires='>=3.10',
    entry_points={
        'console_scripts': [
            'hurwitzcalc = hurwitzcalc.hurwitzcalc:main',
        ]
    }
)
