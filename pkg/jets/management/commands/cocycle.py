from jets.cocycles import algebra_cocycle, group_cocycle

from ._base import JetCommand


class Command(JetCommand):
    help = 'Evaluate the extension cocycles c_k (group) and sigma_k (Lie algebra)'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        group = actions.add_parser('group', help='c_k(A, B) for A, B in J^{k-1}G')
        algebra = actions.add_parser('algebra', help='sigma_k(A, B) for A, B in J^{k-1}g')
        for sub in (group, algebra):
            self.add_common_arguments(sub, k_required=True)
            sub.add_argument('first', metavar='A.json')
            sub.add_argument('second', metavar='B.json')

    def run(self, **options):
        algebra = self.algebra(options)
        k = options['k']
        self.check_order(k - 1)
        if options['action'] == 'group':
            A = self.load_jet(options['first'], algebra, options, k=k - 1)
            B = self.load_jet(options['second'], algebra, options, k=k - 1)
            value = group_cocycle(algebra, k, A, B)
        else:
            A = self.load_jet_algebra_element(options['first'], algebra, options, k=k - 1)
            B = self.load_jet_algebra_element(options['second'], algebra, options, k=k - 1)
            value = algebra_cocycle(algebra, k, A, B)
        self.emit({'k': k, 'cocycle': options['action'], 'value': value})
