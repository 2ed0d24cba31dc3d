from unittest import TestCase

from mimolab.choices import Precoder
from mimolab.exceptions import ScenarioParseError, ScenarioValidationError
from mimolab.scenarios import emit_scenario, load_preset, parse_scenario

VALID = """
[DEFAULT]
grid = 100,200,300

[small]
precoder = zf
E_t = 10 0
rho = 20 -0.5
K = 10 0
L_p = 2,1,0
"""


class ParseScenarioTestCase(TestCase):
    def test_parse(self):
        (case,) = parse_scenario(VALID)
        self.assertEqual(case.case_id, 'small')
        self.assertEqual(case.precoder, Precoder.ZF)
        self.assertEqual(case.grid, [100, 200, 300])
        self.assertEqual(case.L_p, [2, 1, 0])
        self.assertEqual(case.rho.exponent, -0.5)
        self.assertEqual(case.L, 7)

    def test_round_trip(self):
        cases = parse_scenario(VALID) + load_preset('table2')
        self.assertEqual(parse_scenario(emit_scenario(cases)), cases)

    def test_unknown_key_reports_line(self):
        text = '[a]\nE_t = 10 0\nrho = 10 0\nK = 10 0\nbeta = 1\n'
        with self.assertRaises(ScenarioParseError) as ctx:
            parse_scenario(text)
        self.assertEqual(ctx.exception.line, 5)
        self.assertEqual(ctx.exception.field, 'beta')
        self.assertTrue(str(ctx.exception).startswith('line 5: '))

    def test_malformed_power_law_reports_line(self):
        text = '[a]\nE_t = 10 0\nrho = 10 0\nK = ten 0\n'
        with self.assertRaises(ScenarioParseError) as ctx:
            parse_scenario(text)
        self.assertEqual(ctx.exception.line, 4)
        self.assertEqual(ctx.exception.field, 'K')

    def test_missing_key(self):
        with self.assertRaises(ScenarioParseError) as ctx:
            parse_scenario('[a]\nE_t = 10 0\nrho = 10 0\n')
        self.assertIn("missing required key 'K'", str(ctx.exception))

    def test_bad_precoder(self):
        with self.assertRaises(ScenarioParseError) as ctx:
            parse_scenario('[a]\nprecoder = rzf\nE_t = 10 0\nrho = 10 0\nK = 10 0\n')
        self.assertEqual(ctx.exception.line, 2)

    def test_lp_list_length(self):
        with self.assertRaises(ScenarioParseError):
            parse_scenario('[a]\nE_t = 10 0\nrho = 10 0\nK = 10 0\nL_p = 1,2\n')

    def test_missing_section_header(self):
        with self.assertRaises(ScenarioParseError) as ctx:
            parse_scenario('E_t = 10 0\n')
        self.assertEqual(ctx.exception.line, 1)

    def test_empty_document(self):
        with self.assertRaises(ScenarioParseError):
            parse_scenario('# nothing here\n')

    def test_point_outside_domain(self):
        with self.assertRaises(ScenarioValidationError) as ctx:
            parse_scenario('[a]\nE_t = 10 0\nrho = 10 0\nK = 100 0\ngrid = 100,200\n')
        self.assertEqual(ctx.exception.M, 100)
