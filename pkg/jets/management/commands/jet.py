from django.core.exceptions import ValidationError

from jets.jet_group import COMPOSITIONS, STRATEGIES, jet_inverse, jet_multiply, pure_product
from jets.forms import read_payload
from jets.serialization import element_from_json

from ._base import JetCommand


class Command(JetCommand):
    help = 'Multiply and invert elements of the jet group J^kG'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        mul = actions.add_parser('mul', help='The product A * B')
        self.add_common_arguments(mul)
        mul.add_argument('--strategy', choices=STRATEGIES, default=COMPOSITIONS)
        mul.add_argument('first', metavar='A.json')
        mul.add_argument('second', metavar='B.json')

        inv = actions.add_parser('inv', help='The inverse of A')
        self.add_common_arguments(inv)
        inv.add_argument('--strategy', choices=STRATEGIES, default=COMPOSITIONS)
        inv.add_argument('first', metavar='A.json')

        pure = actions.add_parser('pure', help='(e, x in slot i) * (e, y in slot j)')
        self.add_common_arguments(pure, k_required=True)
        pure.add_argument('--i', type=int, required=True)
        pure.add_argument('--j', type=int, required=True)
        pure.add_argument('payload', metavar='XY.json', help='{"x": [...], "y": [...]}')

    def run(self, **options):
        algebra = self.algebra(options)
        action = options['action']
        if action == 'mul':
            A = self.load_jet(options['first'], algebra, options)
            B = self.load_jet(options['second'], algebra, options)
            self.emit(jet_multiply(A, B, options['strategy']))
        elif action == 'inv':
            A = self.load_jet(options['first'], algebra, options)
            self.emit(jet_inverse(A, options['strategy']))
        elif action == 'pure':
            k = self.check_order(options['k'])
            payload = read_payload(options['payload'])
            if not {'x', 'y'} <= set(payload):
                raise ValidationError(f'{options["payload"]} must give both "x" and "y"')
            x = element_from_json(algebra, payload['x'])
            y = element_from_json(algebra, payload['y'])
            self.emit(pure_product(algebra, options['i'], x, options['j'], y, k))
