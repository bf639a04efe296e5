from django.core.exceptions import ValidationError

from jets import conf
from jets.tangent_group import (
    Permutation, embed_jet, factor_pure, permute, project_jet, tangent_inverse, tangent_multiply,
)

from ._base import JetCommand


def parse_permutation(text):
    try:
        return Permutation(tuple(int(part) for part in text.split(',')))
    except ValueError:
        raise ValidationError(f'--perm takes the images of 1..k, comma separated, got {text!r}')


class Command(JetCommand):
    help = 'Arithmetic in the higher tangent group T^kG and its S_k action'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        for name, help_text, operands in (
            ('mul', 'The product A * B', ('first', 'second')),
            ('inv', 'The inverse of A', ('first',)),
            ('permute', 'sigma . A', ('first',)),
            ('embed', 'The fixed point of T^kG given by a jet', ('first',)),
            ('project', 'The jet of a fixed point of T^kG', ('first',)),
            ('factor', 'Pure factors whose product is A', ('first',)),
        ):
            sub = actions.add_parser(name, help=help_text)
            self.add_common_arguments(sub)
            if name == 'permute':
                sub.add_argument('--perm', required=True, help='Images of 1..k, e.g. 2,1,3')
            for operand in operands:
                sub.add_argument(operand, metavar='JET.json' if name == 'embed' else 'T.json')

    def run(self, **options):
        algebra = self.algebra(options)
        action = options['action']
        if action == 'embed':
            J = self.load_jet(options['first'], algebra, options)
            if J.k > conf.max_tangent_order():
                raise ValidationError(f'Tangent groups are limited to order {conf.max_tangent_order()}')
            self.emit(embed_jet(J))
            return

        A = self.load_tangent(options['first'], algebra, options)
        if action == 'mul':
            B = self.load_tangent(options['second'], algebra, options)
            self.emit(tangent_multiply(A, B))
        elif action == 'inv':
            self.emit(tangent_inverse(A))
        elif action == 'permute':
            self.emit(permute(parse_permutation(options['perm']), A))
        elif action == 'project':
            self.emit(project_jet(A))
        elif action == 'factor':
            self.emit({'factors': factor_pure(A)})
