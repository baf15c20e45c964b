from io import StringIO
import json
import unittest
from unittest.mock import patch

import ddt

from hurwitzcalc.hurwitzcalc import main
from tests.testing import BaseTest

SURFACE = ['--ambient=2,2', '--degree-matrix=2,1;3,4']
FOURFOLD = '{"dim": 4, "supports": [[[1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]], ' \
           '[[0, 0, 1, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]]}'


def braced(values) -> str:
    """Renders a vector the way the table does"""
    return '{' + ', '.join('-' if value is None else str(value) for value in values) + '}'


@ddt.ddt
class TestHurwitzCalc(BaseTest):
    @patch('sys.stdout', new_callable=StringIO)
    def test_version(self, mock_stdout):
        """Tests that if --version option is specified app should just print its version and stop"""
        with self.assertRaises(SystemExit):
            main(['--version'])
        self.assertEqual(mock_stdout.getvalue(), 'Version 1.0\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_version_with_a_query(self, mock_stdout):
        """Tests that --version wins over a query"""
        with self.assertRaises(SystemExit):
            main(['hurwitz', *SURFACE, '--version'])
        self.assertEqual(mock_stdout.getvalue(), 'Version 1.0\n')

    @ddt.data((['hurwitz'], 'ci_sweep.txt'),
              (['hurwitz', '--alpha=1,1'], 'ci_hurwitz.txt'),
              (['genus'], 'ci_genus.txt'))
    @ddt.unpack
    def test_table(self, query, filename):
        """Tests the table output for the running surface"""
        with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
            self.assertEqual(main([*query, *SURFACE]), 0)
        self.assertEqual(mock_stdout.getvalue().rstrip('\n'), self.read(filename).rstrip('\n'))

    @ddt.data((['hurwitz', '--alpha=1,1'], 'ci_hurwitz.json'),
              (['genus'], 'ci_genus.json'))
    @ddt.unpack
    def test_json(self, query, filename):
        """Tests that if --format=json is specified the result is printed as JSON"""
        with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
            self.assertEqual(main([*query, *SURFACE, '--format=json']), 0)
        self.assertEqual(mock_stdout.getvalue().rstrip('\n'), self.read(filename).rstrip('\n'))

    @patch('sys.stdout', new_callable=StringIO)
    def test_input_file(self, mock_stdout):
        """Tests that a request file gives the same result as the equivalent flags"""
        self.assertEqual(main([f'--input={self.data_folder}ci_request.json']), 0)
        self.assertEqual(mock_stdout.getvalue().rstrip('\n'), self.read('ci_hurwitz.json').rstrip('\n'))

    @patch('sys.stdout', new_callable=StringIO)
    def test_flags_override_input_file(self, mock_stdout):
        """Tests that command-line flags take precedence over the request document"""
        self.assertEqual(main([f'--input={self.data_folder}ci_request.json', '--alpha=2,0', '--format=table']), 0)
        self.assertIn('hurwitz degree: {18, 52}', mock_stdout.getvalue())
        self.assertIn('flags: non_curve_direction(1)', mock_stdout.getvalue())

    @patch('sys.stdout', new_callable=StringIO)
    def test_request_from_stdin(self, mock_stdout):
        """Tests that the request is read from STDIN when no variety is given on the command line"""
        with patch('sys.stdin', StringIO(self.read('toric_fourfold.json'))):
            self.assertEqual(main([]), 0)
        self.assertEqual(mock_stdout.getvalue(),
                         'multidegree: 2*T1^2 + 4*T1*T2 + 2*T2^2\n'
                         'volume polynomial: 1/3*T1^3*T2 + T1^2*T2^2 + 1/3*T1*T2^3\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_toric_flag(self, mock_stdout):
        """Tests the toric shorthand with a query for one exponent vector"""
        self.assertEqual(main(['hurwitz', f'--toric={FOURFOLD}', '--alpha=1,1']), 0)
        output = mock_stdout.getvalue()
        self.assertIn('genus vector: {1, 1}\nhurwitz degree: {8, 8}\nflags: degenerate_bound_only', output)

    @patch('sys.stdout', new_callable=StringIO)
    def test_toric_genus_defaults_to_gated(self, mock_stdout):
        """Tests that toric genus polynomials are gated unless --mode is given"""
        main(['genus', f'--toric={FOURFOLD}'])
        self.assertEqual(mock_stdout.getvalue(), 'genus polynomial (gated): T1^2*T2 + T1*T2^2\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_genus_at_beta(self, mock_stdout):
        """Tests that --beta selects a single multisectional genus"""
        main(['genus', *SURFACE, '--beta=2,1', '--mode=gated'])
        self.assertEqual(mock_stdout.getvalue(), 'genus at T1^2*T2 (gated): 21\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_game(self, mock_stdout):
        """Tests the multidegree of the 2 x 2 x 2 game together with the count of Nash equilibria"""
        main(['multidegree', '--game=2,2,2'])
        output = mock_stdout.getvalue()
        self.assertIn('multidegree: 2*T1^3*T2^2*T3 + 2*T1^3*T2*T3^2 + 2*T1^2*T2^3*T3 + 2*T1^2*T2^2*T3^2 + '
                      '2*T1^2*T2*T3^3 + 2*T1*T2^3*T3^2 + 2*T1*T2^2*T3^3\n', output)
        self.assertIn('nash: 2 totally mixed equilibria at T1^2*T2^2*T3^2, discriminant degrees {2, 2, 2}\n', output)

    @patch('sys.stdout', new_callable=StringIO)
    def test_game_json(self, mock_stdout):
        """Tests the JSON form of the Nash data"""
        main(['multidegree', '--game=2,2,2', '--format=json'])
        result = json.loads(mock_stdout.getvalue())
        self.assertEqual(result['spec'], {'game': {'format': [2, 2, 2]}})
        self.assertEqual(result['result']['nash'], {'alpha_star': [2, 2, 2], 'equilibria': 2,
                                                    'hurwitz_bound': [2, 2, 2]})

    @patch('sys.stdout', new_callable=StringIO)
    def test_graph_sweep(self, mock_stdout):
        """Tests the sweep over all exponent vectors for the path graph on three vertices"""
        self.assertEqual(main(['hurwitz', '--graph=3:1-2,2-3']), 0)
        self.assertEqual(mock_stdout.getvalue().rstrip('\n'), self.read('graph_sweep.txt').rstrip('\n'))

    @patch('sys.stdout', new_callable=StringIO)
    def test_graph_sweep_json(self, mock_stdout):
        """Tests the JSON sweep for the path graph on three vertices"""
        self.assertEqual(main(['hurwitz', '--graph=3:1-2,2-3', '--format=json']), 0)
        self.assertEqual(mock_stdout.getvalue().rstrip('\n'), self.read('graph_sweep.json').rstrip('\n'))
        rows = json.loads(mock_stdout.getvalue())['result']['rows']
        self.assertEqual(rows[7], {'index': 7, 'alpha': [2, 2, 1], 'monomial': 'T1^2*T2^2*T3', 'delta': 8,
                                   'hurwitz_degree': [8, 16, 24], 'flags': []})

    @ddt.data(['hurwitz', *SURFACE], ['hurwitz', *SURFACE, '--format=json'], ['genus', *SURFACE, '--format=json'],
              ['hurwitz', '--graph=3:1-2,2-3', '--format=json'], ['multidegree', '--game=2,2,2'])
    def test_repeated_runs(self, argv):
        """Tests that three runs of the same invocation print the same bytes"""
        outputs = set()
        for _ in range(3):
            with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
                self.assertEqual(main(argv), 0)
            outputs.add(mock_stdout.getvalue())
        self.assertEqual(len(outputs), 1)

    @ddt.data('ci_hurwitz.json', 'ci_genus.json', 'graph_sweep.json')
    def test_json_round_trip(self, filename):
        """Tests that parsing and printing a JSON result again reproduces it byte for byte"""
        text = self.read(filename).rstrip('\n')
        self.assertEqual(json.dumps(json.loads(text), indent=4, sort_keys=True, ensure_ascii=False), text)

    @ddt.data((['hurwitz', *SURFACE], 'ci_sweep.txt', 'hurwitz_degree'),
              (['hurwitz', '--graph=3:1-2,2-3'], 'graph_sweep.txt', 'hurwitz_degree'),
              (['chow', *SURFACE], None, 'chow_degrees'))
    @ddt.unpack
    def test_sweep_table_matches_json(self, argv, filename, key):
        """Tests that the table and the JSON form of a sweep carry the same values"""
        with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
            main(argv)
        table = mock_stdout.getvalue()
        if filename:
            self.assertEqual(table.rstrip('\n'), self.read(filename).rstrip('\n'))
        with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
            main([*argv, '--format=json'])
        rows = json.loads(mock_stdout.getvalue())['result']['rows']
        lines = [line.split(' | ') for line in table.splitlines()[1:len(rows) + 1]]
        self.assertEqual(len(lines), len(rows))
        for line, row in zip(lines, rows):
            cells = [cell.strip() for cell in line]
            self.assertEqual(cells[0], str(row['index']))
            self.assertEqual(cells[1], '-' if row['delta'] is None else str(row['delta']))
            self.assertEqual(cells[2], row['monomial'])
            self.assertEqual(cells[3], braced(row[key]))
            self.assertEqual(cells[4], ', '.join(row['flags']) or '-')

    def test_values_table_matches_json(self):
        """Tests that the table and the JSON form of a single degree report carry the same values"""
        result = json.loads(self.read('ci_hurwitz.json'))['result']
        self.assertEqual(self.read('ci_hurwitz.txt').rstrip('\n').splitlines(),
                         ['alpha: ' + braced(result['alpha']),
                          f'delta: {result["delta"]}',
                          'genus vector: ' + braced(result['genus_vector']),
                          'hurwitz degree: ' + braced(result['hurwitz_degree']),
                          'flags: ' + (', '.join(result['flags']) or '-')])
        genus = json.loads(self.read('ci_genus.json'))['result']
        self.assertEqual(self.read('ci_genus.txt').rstrip('\n'),
                         f'genus polynomial ({genus["genus_mode"]}): {genus["genus_polynomial"]["text"]}')

    @patch('sys.stdout', new_callable=StringIO)
    def test_game_without_totally_mixed_equilibria(self, mock_stdout):
        """Tests a 2 x 3 game, whose alpha* leaves the box"""
        self.assertEqual(main(['multidegree', '--game=2,3']), 0)
        self.assertIn('nash: 0 totally mixed equilibria (n - k = {1, -1} lies outside the box), '
                      'discriminant degrees {0, -2}\n', mock_stdout.getvalue())

    @patch('sys.stdout', new_callable=StringIO)
    def test_chow_of_empty_intersection(self, mock_stdout):
        """Tests that two quadrics in the first factor of P^1 x P^1 have zero Chow degrees"""
        self.assertEqual(main(['chow', '--ambient=1,1', '--degree-matrix=2,0;2,0', '--alpha=1,0']), 0)
        self.assertEqual(mock_stdout.getvalue(), 'chow degrees at T1: {0, 0}\n')

    @ddt.data(('--alpha=1,0', 'chow degrees at T1: {6, 11}'), ('--alpha=0,1', 'chow degrees at T2: {11, 4}'))
    @ddt.unpack
    def test_chow(self, alpha, expected):
        """Tests the degrees of the Chow form read off the multidegree"""
        with patch('sys.stdout', new_callable=StringIO) as mock_stdout:
            main(['chow', *SURFACE, alpha])
        self.assertEqual(mock_stdout.getvalue(), expected + '\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_chow_sweep(self, mock_stdout):
        """Tests the sweep of Chow degrees over all exponent vectors of degree c - 1"""
        main(['chow', *SURFACE])
        self.assertEqual(mock_stdout.getvalue(),
                         'index | delta | monomial | chow degrees | flags\n'
                         '0     | -     | T1       | {6, 11}      | -\n'
                         '1     | -     | T2       | {11, 4}      | -\n')

    @patch('sys.stdout', new_callable=StringIO)
    def test_colorized_json(self, mock_stdout):
        """Tests that --colorize highlights JSON output with escape sequences"""
        main(['genus', *SURFACE, '--format=json', '--colorize'])
        self.assertIn('\x1b[', mock_stdout.getvalue())

    def test_verbose(self):
        """Tests that --verbose reports the computation steps"""
        with patch('sys.stdout', new_callable=StringIO):
            with self.assertLogs('root', level='INFO') as cm:
                main(['hurwitz', *SURFACE, '--verbose'])
        self.assertIn('INFO:root:Computing hurwitz of a complete intersection', cm.output)
        self.assertIn('INFO:root:Computing the Hurwitz degrees at T1*T2', cm.output)


if __name__ == '__main__':
    unittest.main()
