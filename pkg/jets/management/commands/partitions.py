from django.core.exceptions import ValidationError

from jets.exact import bell_number
from jets.partitions import (
    Partition, count_with_sizes, derived_partitions, enumerate_partitions, parent_partition,
    partitions_with_sizes,
)

from ._base import JetCommand


def parse_sizes(text):
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise ValidationError(f'--sizes takes comma separated positive integers, got {text!r}')


class Command(JetCommand):
    help = 'Enumerate and count anti-lexicographically ordered set partitions'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        listing = actions.add_parser('list', help='List P_n, optionally only one block-size profile')
        listing.add_argument('--n', type=int, required=True)
        listing.add_argument('--sizes', help='Block sizes, e.g. 1,2')

        count = actions.add_parser('count', help='Count the partitions with the given block sizes')
        count.add_argument('--sizes', required=True)

        derive = actions.add_parser('derive', help='The partitions derived from PART')
        derive.add_argument('partition', metavar='PART')

        parent = actions.add_parser('parent', help='The partition PART is derived from')
        parent.add_argument('partition', metavar='PART')

        bell = actions.add_parser('bell', help='Bell numbers B_0 .. B_n')
        bell.add_argument('--n', type=int, required=True)

    def run(self, **options):
        action = options['action']
        if action == 'list':
            n = options['n']
            if options.get('sizes'):
                sizes = parse_sizes(options['sizes'])
                found = partitions_with_sizes(n, sizes)
                self.emit({'n': n, 'sizes': list(sizes), 'count': len(found), 'partitions': found})
            else:
                found = enumerate_partitions(n)
                self.emit({'n': n, 'count': len(found), 'partitions': found})
        elif action == 'count':
            sizes = parse_sizes(options['sizes'])
            self.emit({'sizes': list(sizes), 'n': sum(sizes), 'count': count_with_sizes(sizes)})
        elif action == 'derive':
            partition = Partition.parse(options['partition'])
            self.emit({'partition': partition, 'derived': derived_partitions(partition)})
        elif action == 'parent':
            partition = Partition.parse(options['partition'])
            self.emit({'partition': partition, 'parent': parent_partition(partition)})
        elif action == 'bell':
            n = options['n']
            self.emit({'n': n, 'bell': [bell_number(m) for m in range(n + 1)]})
