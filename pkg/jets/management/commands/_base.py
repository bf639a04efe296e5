import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from jets import conf
from jets.algebras import verify_algebra
from jets.exceptions import JetGroupsError
from jets.forms import (
    JetAlgebraElementForm, JetElementForm, TangentElementForm, load_algebra, read_payload,
)
from jets.jet_group import SIDES
from jets.serialization import dumps

INPUT_ERROR = 2
CHECK_FAILED = 1

logger = logging.getLogger(__name__)


class JetCommand(BaseCommand):
    """
    Shared plumbing: JSON payload on standard output, logs on standard
    error, exit status 2 for unusable input.
    """

    def add_common_arguments(self, parser, k_required=False):
        parser.add_argument('--algebra', default='sl2',
                            help='Builtin algebra name or path of an algebra file (default: sl2)')
        parser.add_argument('--k', type=int, required=k_required, help='Jet order')
        parser.add_argument('--side', choices=SIDES, help='Trivialization the element files must use')

    def handle(self, *args, **options):
        if options.get('verbosity', 1) >= 2:
            logging.getLogger('jets').setLevel(logging.DEBUG)
        try:
            return self.run(**options)
        except ValidationError as exc:
            logger.info('rejected input: %s', exc.messages)
            raise CommandError('; '.join(exc.messages), returncode=INPUT_ERROR)
        except JetGroupsError as exc:
            logger.info('rejected input: %s', exc)
            raise CommandError(str(exc), returncode=INPUT_ERROR)

    def run(self, **options):
        raise NotImplementedError

    def emit(self, payload):
        self.stdout.write(dumps(payload))

    def algebra(self, options):
        """The --algebra operand; computations refuse algebras that break their own axioms."""
        algebra = load_algebra(options['algebra'])
        report = verify_algebra(algebra)
        if not report.passed:
            raise ValidationError(f'{algebra} is not a valid algebra: {report.counterexample}')
        return algebra

    def _load(self, form_class, path, algebra, options, k=None):
        payload = read_payload(path)
        side = options.get('side')
        if side is not None:
            payload.setdefault('side', side)
            if payload['side'] != side:
                raise ValidationError(f'{path} is {payload["side"]}-trivialized, --side asks for {side}')
        form = form_class.from_payload(payload, algebra=algebra)
        element = form.validated('element')
        expected = options.get('k') if k is None else k
        if expected is not None and element.k != expected:
            raise ValidationError(f'{path} has order {element.k}, expected {expected}')
        return element

    def load_jet(self, path, algebra, options, k=None):
        return self._load(JetElementForm, path, algebra, options, k)

    def load_tangent(self, path, algebra, options, k=None):
        return self._load(TangentElementForm, path, algebra, options, k)

    def load_jet_algebra_element(self, path, algebra, options, k=None):
        return self._load(JetAlgebraElementForm, path, algebra, options, k)

    def check_order(self, k, limit=None):
        limit = conf.max_jet_order() if limit is None else limit
        if k is None or not 1 <= k <= limit:
            raise ValidationError(f'--k must satisfy 1 <= k <= {limit}, got {k}')
        return k
