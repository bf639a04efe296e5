from jets.algebras import BUILTINS, PARAMETRIZED, structure_constants, verify_algebra
from jets.forms import load_algebra
from jets.serialization import format_rational

from ._base import JetCommand


class Command(JetCommand):
    help = 'Describe an algebra: its structure constants and whether its axioms hold'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        describe = actions.add_parser('describe', help='Structure constants and axiom report of ALGEBRA')
        describe.add_argument('name', metavar='ALGEBRA', help='Builtin name or path of an algebra file')
        actions.add_parser('builtins', help='The names accepted by --algebra')

    def run(self, **options):
        if options['action'] == 'builtins':
            self.emit({'builtins': sorted(BUILTINS) + [f'{family}(n)' for family in sorted(PARAMETRIZED)]})
            return
        algebra = load_algebra(options['name'])
        brackets = [
            [i, j, [format_rational(c) for c in row]]
            for (i, j), row in sorted(structure_constants(algebra).items())
        ]
        self.emit({
            'algebra': algebra,
            'brackets': brackets,
            'axioms': verify_algebra(algebra),
        })
