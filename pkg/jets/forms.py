import json

from django import forms
from django.core.exceptions import ValidationError

from . import conf
from .algebras import KIND_CHOICES, MATRIX, STRUCTURE_CONSTANTS, builtin, is_builtin_name
from .exceptions import JetGroupsError
from .jet_group import RIGHT, SIDES
from .serialization import algebra_from_json, jet_algebra_from_json, jet_from_json, tangent_from_json

SIDE_CHOICES = [(side, side.title()) for side in SIDES]


def read_payload(path):
    """Load one JSON document from ``path``."""
    try:
        with open(path, encoding='utf-8') as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise ValidationError(f'Cannot read {path}: {exc.strerror or exc}')
    except json.JSONDecodeError as exc:
        raise ValidationError(f'{path} is not valid JSON: {exc}')
    if not isinstance(payload, dict):
        raise ValidationError(f'{path} must hold a JSON object')
    return payload


class PayloadForm(forms.Form):
    """
    A form bound to a decoded JSON document. JSON-valued fields are
    re-encoded so that strings such as "identity" and empty lists reach the
    field intact.
    """

    @classmethod
    def from_payload(cls, payload, **kwargs):
        data = {}
        for name, field in cls.base_fields.items():
            if name not in payload:
                continue
            value = payload[name]
            data[name] = json.dumps(value) if isinstance(field, forms.JSONField) else value
        return cls(data, **kwargs)

    def validated(self, key):
        if not self.is_valid():
            raise ValidationError(self.errors)
        return self.cleaned_data[key]


class AlgebraForm(PayloadForm):
    """An algebra file: a structure constant table or a matrix basis"""

    name = forms.CharField(max_length=64, required=False)
    kind = forms.ChoiceField(choices=KIND_CHOICES, required=False)
    dim = forms.IntegerField(min_value=1, required=False)
    leibniz = forms.BooleanField(required=False)
    brackets = forms.JSONField(required=False)
    basis = forms.JSONField(required=False)

    def clean_kind(self):
        return self.cleaned_data.get('kind') or STRUCTURE_CONSTANTS

    def clean_brackets(self):
        brackets = self.cleaned_data.get('brackets')
        if brackets is not None and not isinstance(brackets, list):
            raise ValidationError('"brackets" must be a list of [i, j, [coefficients]] entries')
        return brackets or []

    def clean_basis(self):
        basis = self.cleaned_data.get('basis')
        if basis is not None and not isinstance(basis, list):
            raise ValidationError('"basis" must be a list of matrices')
        return basis or []

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        kind = cleaned_data['kind']
        if kind == MATRIX and not cleaned_data['basis']:
            raise ValidationError('A matrix algebra needs a nonempty "basis"')
        if kind == STRUCTURE_CONSTANTS and cleaned_data.get('dim') is None:
            raise ValidationError('A structure constant algebra needs "dim"')
        try:
            cleaned_data['algebra'] = algebra_from_json(cleaned_data)
        except JetGroupsError as exc:
            raise ValidationError(str(exc))
        return cleaned_data


def load_algebra(value):
    """A builtin name such as ``sl2`` or ``abelian(3)``, or the path of an algebra file."""
    value = value.strip()
    if is_builtin_name(value):
        try:
            return builtin(value)
        except JetGroupsError as exc:
            raise ValidationError(str(exc))
    return AlgebraForm.from_payload(read_payload(value)).validated('algebra')


class ElementForm(PayloadForm):
    """Shared order and side handling; subclasses build ``cleaned_data['element']``."""

    k = forms.IntegerField(min_value=1)
    side = forms.ChoiceField(choices=SIDE_CHOICES, required=False)

    def __init__(self, *args, algebra, **kwargs):
        super().__init__(*args, **kwargs)
        self.algebra = algebra

    def max_order(self):
        return conf.max_jet_order()

    def clean_k(self):
        k = self.cleaned_data['k']
        limit = self.max_order()
        if k > limit:
            raise ValidationError(f'Order {k} exceeds the configured maximum of {limit}')
        return k

    def clean_side(self):
        return self.cleaned_data.get('side') or RIGHT

    def build(self, cleaned_data):
        raise NotImplementedError

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        try:
            cleaned_data['element'] = self.build(cleaned_data)
        except JetGroupsError as exc:
            raise ValidationError(str(exc))
        return cleaned_data


class JetElementForm(ElementForm):
    g = forms.JSONField(required=False)
    x = forms.JSONField()

    def build(self, cleaned_data):
        return jet_from_json(self.algebra, cleaned_data)


class TangentElementForm(ElementForm):
    g = forms.JSONField(required=False)
    components = forms.JSONField()

    def max_order(self):
        return conf.max_tangent_order()

    def build(self, cleaned_data):
        return tangent_from_json(self.algebra, cleaned_data)


class JetAlgebraElementForm(ElementForm):
    xi = forms.JSONField()
    x = forms.JSONField()

    def build(self, cleaned_data):
        return jet_algebra_from_json(self.algebra, cleaned_data)
