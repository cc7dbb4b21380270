"""
Turn command-line arguments into domain values.

Groups, modules and unit models are given either by built-in name or as
JSON, inline or in a file. Schema problems become InputError with the
failing field path; mathematical inconsistencies raised while building the
value propagate unchanged.
"""

import io
import logging
from pathlib import Path

from rest_framework import serializers
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser

from picdescent.exceptions import InputError
from picdescent.gmodules.builtins import builtin_group
from picdescent.gmodules.constructions import (
    coaugmentation_quotient, negation_lattice, regular_module, trivial_module,
)
from picdescent.gmodules.models import GModule
from picdescent.gmodules.serializers import FiniteGroupSerializer, GModuleSerializer
from picdescent.picard.serializers import UnitModelSerializer
from picdescent.zlattice.models import FgAbelianGroup

logger = logging.getLogger(__name__)

MODULE_NAMES = ('trivial', 'regular', 'coaugmentation', 'negation')


def _looks_like_json(source):
    return isinstance(source, str) and source.lstrip()[:1] in ('{', '[')


def load_json(source):
    """Parse `source`, either a JSON document or a path to one."""
    if isinstance(source, (dict, list)):
        return source
    text = str(source)
    if not _looks_like_json(text):
        path = Path(text)
        if not path.is_file():
            raise InputError(f'{text!r} is neither JSON nor a readable file')
        text = path.read_text(encoding='utf-8')
    try:
        return JSONParser().parse(io.BytesIO(text.encode('utf-8')))
    except ParseError as exc:
        raise InputError(f'malformed JSON: {exc.detail}')


def _error_paths(errors, prefix=''):
    if isinstance(errors, dict):
        for key, value in errors.items():
            yield from _error_paths(value, f'{prefix}.{key}' if prefix else str(key))
    elif isinstance(errors, list) and all(isinstance(e, str) for e in errors):
        for message in errors:
            yield prefix or 'non_field_errors', str(message)
    elif isinstance(errors, list):
        for index, value in enumerate(errors):
            yield from _error_paths(value, f'{prefix}[{index}]')
    else:
        yield prefix or 'non_field_errors', str(errors)


def validated(serializer_class, data, context=None, location='input', build=True):
    """Validate `data` and return the created value, or the validated data when `build` is off."""
    serializer = serializer_class(data=data, context=context or {})
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as exc:
        problems = '; '.join(f'{location}.{path}: {message}' for path, message in _error_paths(exc.detail))
        logger.debug('rejected %s: %s', location, problems)
        raise InputError(problems)
    if not build:
        return serializer.validated_data
    return serializer.save()


def load_group(source):
    """A built-in group name, or group JSON {"order": n, "table": [...]}."""
    if isinstance(source, dict) or _looks_like_json(source) or Path(str(source)).is_file():
        return validated(FiniteGroupSerializer, load_json(source), location='group')
    return builtin_group(source)


def named_module(name, G):
    if name == 'trivial':
        return trivial_module(G, FgAbelianGroup.free(1), name='Z')
    if name == 'regular':
        return regular_module(G)
    if name == 'coaugmentation':
        # rank |G| - 1, so the zero module over C1
        return coaugmentation_quotient(G)[0]
    if name == 'negation':
        if G.order != 2:
            raise InputError('the negation lattice is defined over a group of order 2')
        lattice = negation_lattice()
        return GModule(G, lattice.underlying, lattice.action, name=lattice.name)
    raise InputError(f'unknown module {name!r}; expected one of {", ".join(MODULE_NAMES)} or JSON')


def load_module(source, G):
    """A named module over G, or module JSON in the gmodules schema."""
    if str(source) in MODULE_NAMES:
        return named_module(str(source), G)
    return validated(GModuleSerializer, load_json(source), context={'group': G}, location='module')


def load_model(source):
    """
    A unit model: JSON with a "group" (name or table) plus the fields of
    the picard unit-model schema.
    """
    data = load_json(source)
    if not isinstance(data, dict) or 'group' not in data:
        raise InputError('model: a JSON object with a "group" entry is required')
    data = dict(data)
    G = load_group(data.pop('group'))
    return validated(UnitModelSerializer, data, context={'group': G}, location='model')
