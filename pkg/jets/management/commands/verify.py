from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from jets import conf
from jets.forms import load_algebra
from jets.verification import DEFAULT_ALGEBRAS, SUITES, run_suite

from ._base import CHECK_FAILED, JetCommand


class Command(JetCommand):
    help = 'Run the exact verification suites and print one report per property'

    def add_arguments(self, parser):
        parser.add_argument('suite', choices=SUITES)
        parser.add_argument('--algebra', action='append', dest='algebras',
                            help='Builtin name or algebra file; repeat for several (default: all builtins)')
        parser.add_argument('--k', type=int, help='Check every order up to K')
        parser.add_argument('--trials', type=int, help='Random cases per property')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--parallel', action='store_true', help='Evaluate checks in a thread pool')

    def run(self, **options):
        names = options['algebras'] or list(DEFAULT_ALGEBRAS)
        algebras = [load_algebra(name) for name in names]
        k = self.check_order(options['k'] if options['k'] is not None else conf.get('DEFAULT_CHECK_ORDER'))
        trials = options['trials'] if options['trials'] is not None else conf.get('DEFAULT_TRIALS')
        if trials < 1:
            raise ValidationError('--trials must be positive')
        seed = options['seed'] if options['seed'] is not None else conf.get('DEFAULT_SEED')

        reports = run_suite(options['suite'], algebras, k, trials, seed, parallel=options['parallel'])
        failed = [r for r in reports if r.status == 'fail']
        self.emit({
            'suite': options['suite'],
            'algebras': names,
            'k': k,
            'trials': trials,
            'seed': seed,
            'passed': not failed,
            'reports': reports,
        })
        if failed:
            raise CommandError(
                f'{len(failed)} of {len(reports)} checks failed: ' + ', '.join(r.name for r in failed),
                returncode=CHECK_FAILED,
            )
