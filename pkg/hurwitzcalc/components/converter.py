"""This module contains a class for converting a calculation report into HTML"""

from datetime import datetime
import json
import os

from jinja2 import Environment, PackageLoader, select_autoescape


class Converter:
    """This class is needed for report conversion"""

    def __init__(self, logger):
        """
        This class constructor initializes the required variables for the report conversion

        Parameters:
            logger (module): logging module
        """
        self.logger = logger

    def render(self, report) -> str:
        """
        This method renders a report with the HTML template

        Parameters:
            report (Report): The result of a calculation

        Returns:
            str: HTML document
        """
        env = Environment(loader=PackageLoader('components', 'templates'), autoescape=select_autoescape())
        template = env.get_template('report.html')
        return template.render(query=report.request.query.kind,
                               spec=json.dumps(report.to_dict()['spec'], sort_keys=True, ensure_ascii=False),
                               header=report.header() if report.rows is not None else (),
                               rows=report.cells(),
                               lines=report.lines)

    def to_html(self, report, path):
        """
        This method converts a report to HTML format and saves it

        Parameters:
            report (Report): The result of a calculation
            path (str): Output filepath

        Returns:
            str: The path of the saved file
            None: If the file could not be saved
        """
        self.logger.info('Start converting the result to HTML format')
        output_filepath = self.prepare_output_filepath(path)
        if not output_filepath:
            return None
        try:
            with open(output_filepath, 'w') as file:
                file.write(self.render(report))
        except PermissionError:
            self.logger.error(f'Unable to save HTML file at {output_filepath}. Permission denied.')
            return None
        self.logger.info(f'HTML file created and saved as {output_filepath}')
        return output_filepath

    def prepare_output_filepath(self, path):
        """
        This method is needed to format the output filepath

        Parameters:
            path (str): Output filepath, a directory gets a timestamped file name with extension .html

        Returns:
            str: Formatted output filepath
            None: If permission denied
        """
        output_path, output_file_extension = os.path.splitext(path.rstrip(os.sep))
        if not output_file_extension:
            output_filename = f'{datetime.now():%Y%m%d-%H%M%S}.html'
        else:
            output_filename = f'{output_path.split(os.sep)[-1]}{output_file_extension}'
            output_path = f'{os.sep}'.join(output_path.split(os.sep)[:-1])
        if output_path:
            output_path += os.sep
            if not os.path.exists(output_path):
                try:
                    os.makedirs(output_path, exist_ok=True)
                except PermissionError:
                    self.logger.error(f'Unable to create directory {output_path}. Permission denied.')
                    return None
        return output_path + output_filename
