"""
JSON codec for terms, cube unions, frames, cube lifts and family specs.

Rationals are written as reduced ``"p/q"`` strings, keys are sorted and no whitespace is emitted, so identical
values always serialize to identical bytes. Every document is checked against :data:`.DOCUMENT_SCHEMA` with
:func:`jsonschema.validate` before it is decoded.

    >>> dumps(Ladder(1, 1, '1/2', True))
    '{"include_target":true,"kind":"ladder","offset0":"1/1","ratio":"1/2","target":"1/1"}'

**Copyright**::

    +===================================================+
    |                 © 2020 Privex Inc.                |
    |               https://www.privex.io               |
    +===================================================+
    |                                                   |
    |        Privex's ScatterLab                        |
    |        License: X11 / MIT                         |
    |                                                   |
    +===================================================+

"""
import json
import logging
from fractions import Fraction

import attr
import jsonschema

from privex.scatterlab.cubes import Box, BoxUnion, FrameRegion, LiftedFamily
from privex.scatterlab.exceptions import SchemaError
from privex.scatterlab.objects import Component, FamilySpec
from privex.scatterlab.rational import rat, rat_str
from privex.scatterlab.terms import PtSetTerm, TERM_TYPES, TERM_KINDS, canonical, validate

log = logging.getLogger(__name__)

__all__ = [
    'RAT_SCHEMA', 'TERM_SCHEMA', 'DOCUMENT_SCHEMA', 'FAMILY_SPEC_SCHEMA', 'emit', 'parse', 'emit_term', 'parse_term',
    'parse_spec', 'dumps', 'loads', 'check_schema',
]

RAT_SCHEMA = {'type': 'string', 'pattern': r'^-?\d+/[1-9]\d*$'}


def _field_schema(field: attr.Attribute) -> dict:
    if field.name == 'parts':
        return {'type': 'array', 'items': {'$ref': '#/definitions/term'}}
    if field.type is Fraction:
        return {'$ref': '#/definitions/rat'}
    if field.type is bool:
        return {'type': 'boolean'}
    return {'$ref': '#/definitions/term'}


def _kind_schema(cls) -> dict:
    fields = attr.fields(cls)
    props = {'kind': {'const': cls.kind}}
    props.update({f.name: _field_schema(f) for f in fields})
    return {
        'type': 'object', 'properties': props, 'additionalProperties': False,
        'required': ['kind'] + [f.name for f in fields if f.default is attr.NOTHING],
    }


_BOX = {
    'type': 'object',
    'properties': {
        'corner': {'type': 'array', 'items': {'$ref': '#/definitions/rat'}, 'minItems': 1},
        'edge': {'$ref': '#/definitions/rat'},
        'open': {'type': 'boolean'},
    },
    'required': ['corner', 'edge'],
    'additionalProperties': False,
}

_FRAME = {
    'type': 'object',
    'properties': {
        'kind': {'const': 'frame'},
        'm': {'type': ['integer', 'null']},
        'outer': {'$ref': '#/definitions/box'},
        'holes': {'type': 'array', 'items': {'$ref': '#/definitions/box'}},
    },
    'required': ['kind', 'outer', 'holes'],
    'additionalProperties': False,
}

_DEFINITIONS = {
    'rat': RAT_SCHEMA,
    'term': {'oneOf': [{'$ref': f'#/definitions/kind_{c.kind}'} for c in TERM_TYPES]},
    'box': _BOX,
    'frame': _FRAME,
    **{f'kind_{c.kind}': _kind_schema(c) for c in TERM_TYPES},
}

TERM_SCHEMA = {'definitions': _DEFINITIONS, 'allOf': [{'$ref': '#/definitions/term'}]}

DOCUMENT_SCHEMA = {
    'definitions': _DEFINITIONS,
    'oneOf': [
        {'$ref': '#/definitions/term'},
        {
            'type': 'object',
            'properties': {
                'kind': {'const': 'box_union'}, 'dimension': {'type': 'integer', 'minimum': 1},
                'boxes': {'type': 'array', 'items': {'$ref': '#/definitions/box'}},
            },
            'required': ['kind', 'dimension', 'boxes'],
            'additionalProperties': False,
        },
        {'$ref': '#/definitions/frame'},
        {
            'type': 'object',
            'properties': {
                'kind': {'const': 'frames'},
                'frames': {'type': 'array', 'items': {'$ref': '#/definitions/frame'}},
                'base': {'$ref': '#/definitions/box'},
            },
            'required': ['kind', 'frames', 'base'],
            'additionalProperties': False,
        },
        {
            'type': 'object',
            'properties': {
                'kind': {'const': 'lifted'}, 'dimension': {'type': 'integer', 'minimum': 1},
                'linear': {'$ref': '#/definitions/term'},
                'components': {
                    'type': 'array',
                    'items': {
                        'type': 'array', 'items': {'$ref': '#/definitions/rat'}, 'minItems': 2, 'maxItems': 2
                    },
                },
            },
            'required': ['kind', 'dimension', 'linear', 'components'],
            'additionalProperties': False,
        },
    ],
}

FAMILY_SPEC_SCHEMA = {
    'type': 'object',
    'properties': {
        'family': {'type': 'string'},
        'params': {'type': 'object'},
        'label': {'type': ['string', 'null']},
    },
    'required': ['family'],
}


def check_schema(data, schema: dict = DOCUMENT_SCHEMA):
    """
    Validate ``data`` against ``schema``.

    :raises SchemaError: carrying the failing JSON path and the validator message
    """
    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        path = '/'.join(str(p) for p in e.absolute_path)
        raise SchemaError(f'Invalid document at /{path}: {e.message}', details=dict(path=path))
    return data


#########
# Terms
#########

def emit_term(t: PtSetTerm) -> dict:
    out = {'kind': t.kind}
    for f in attr.fields(t.__class__):
        v = getattr(t, f.name)
        if f.name == 'parts':
            out[f.name] = [emit_term(p) for p in v]
        elif isinstance(v, PtSetTerm):
            out[f.name] = emit_term(v)
        elif isinstance(v, bool):
            out[f.name] = v
        else:
            out[f.name] = rat_str(v)
    return out


def _decode_term(data: dict) -> PtSetTerm:
    cls = TERM_KINDS[data['kind']]
    kwargs = {}
    for f in attr.fields(cls):
        if f.name not in data:
            continue
        v = data[f.name]
        if f.name == 'parts':
            kwargs[f.name] = tuple(_decode_term(p) for p in v)
        elif isinstance(v, dict):
            kwargs[f.name] = _decode_term(v)
        else:
            kwargs[f.name] = v if isinstance(v, bool) else rat(v)
    return cls(**kwargs)


def parse_term(data: dict) -> PtSetTerm:
    """Schema check, decode and validate a term document; the result is canonical"""
    check_schema(data, TERM_SCHEMA)
    return canonical(validate(_decode_term(data)))


#########
# Cubes
#########

def _emit_box(b: Box) -> dict:
    return {'corner': [rat_str(c) for c in b.corner], 'edge': rat_str(b.edge), 'open': b.open}


def _parse_box(data: dict) -> Box:
    return Box(tuple(rat(c) for c in data['corner']), rat(data['edge']), data.get('open', False))


def _emit_frame(f: FrameRegion) -> dict:
    return {'kind': 'frame', 'm': f.m, 'outer': _emit_box(f.outer), 'holes': [_emit_box(h) for h in f.holes]}


def _parse_frame(data: dict) -> FrameRegion:
    return FrameRegion(_parse_box(data['outer']), [_parse_box(h) for h in data['holes']], data.get('m'))


##############
# Documents
##############

def emit(value) -> dict:
    """
    JSON-ready dict for a term, :class:`.BoxUnion`, :class:`.FrameRegion`, ``(frames, base)`` pair,
    :class:`.LiftedFamily` or :class:`.FamilySpec`.
    """
    if isinstance(value, PtSetTerm):
        return emit_term(value)
    if isinstance(value, BoxUnion):
        return {'kind': 'box_union', 'dimension': value.dimension, 'boxes': [_emit_box(b) for b in value.boxes]}
    if isinstance(value, FrameRegion):
        return _emit_frame(value)
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], Box):
        return {'kind': 'frames', 'frames': [_emit_frame(f) for f in value[0]], 'base': _emit_box(value[1])}
    if isinstance(value, LiftedFamily):
        return {
            'kind': 'lifted', 'dimension': value.dimension, 'linear': emit_term(value.linear),
            'components': [[rat_str(c.lo), rat_str(c.hi)] for c in value.components],
        }
    if isinstance(value, FamilySpec):
        return {'family': value.family, 'params': dict(value.params), 'label': value.label}
    raise SchemaError(f'No JSON form for {type(value).__name__}', details=dict(type=type(value).__name__))


def parse(data: dict):
    """Inverse of :func:`.emit` for every document kind except :class:`.FamilySpec` (see :func:`.parse_spec`)"""
    check_schema(data)
    kind = data.get('kind')
    if kind == 'box_union':
        return BoxUnion([_parse_box(b) for b in data['boxes']], dimension=data['dimension'])
    if kind == 'frame':
        return _parse_frame(data)
    if kind == 'frames':
        return [_parse_frame(f) for f in data['frames']], _parse_box(data['base'])
    if kind == 'lifted':
        comps = [Component('interval', lo, hi) for lo, hi in data['components']]
        return LiftedFamily(linear=parse_term(data['linear']), dimension=data['dimension'], components=comps)
    return parse_term(data)


def parse_spec(data: dict) -> FamilySpec:
    check_schema(data, FAMILY_SPEC_SCHEMA)
    return FamilySpec.from_dict(data)


def dumps(value) -> str:
    """Canonical JSON text: sorted keys, compact separators"""
    data = value if isinstance(value, (dict, list)) else emit(value)
    return json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f'Malformed JSON: {e}', details=dict(line=e.lineno, column=e.colno))
    if isinstance(data, dict) and 'family' in data and 'kind' not in data:
        return parse_spec(data)
    return parse(data)
