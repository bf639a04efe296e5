from django.test import SimpleTestCase

from jets.algebras import builtin
from jets.verification import EXTRA_CHECK_ORDER, oracle_checks, run_suite


class OracleCheckTests(SimpleTestCase):

    def trials(self, checks):
        return {check.name: check.trials for check in checks}

    def test_side_checks_thin_out_at_high_order(self):
        a = builtin('sl2')
        trials = self.trials(oracle_checks(a, 6, 50))
        low, high = f'J^{EXTRA_CHECK_ORDER} vs Taylor oracle ({a})', f'J^6 vs Taylor oracle ({a})'
        self.assertEqual(trials[f'{low}: left trivialization'], 25)
        self.assertEqual(trials[f'{high}: multiply'], 50)
        self.assertEqual(trials[f'{high}: inverse'], 50)
        self.assertEqual(trials[f'{high}: left trivialization'], 3)
        self.assertEqual(trials[f'{high}: trivialization roundtrip'], 3)

    def test_abstract_algebra_is_skipped(self):
        reports = run_suite('oracle', [builtin('leibniz2')], 2, 1, 7)
        self.assertEqual([r.status for r in reports], ['skipped'])
