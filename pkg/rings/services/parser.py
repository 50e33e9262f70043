"""Line-oriented ring-spec documents.

    field Q | field GF <prime>
    var <name> <integer-weight>        (declaration order is variable order)
    rel <polynomial in +, -, *, ^, integer coefficients>
    kind flip | flop
    template brown-reid lambda=<n> mu=<n> d=<n> e=<n> alpha=<n> beta=<n>

`#` starts a comment. A template replaces the var and rel lines.
"""
import keyword
import logging
import re
from tokenize import TokenError

from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import CoercionFailed

from algebra.exceptions import RingSpecError, RingSpecSyntaxError
from algebra.models import GradedRing, Weighting, field_domain, field_label
from rings.models import FLIP, KIND_TO_A, UNSPECIFIED, RingSpec
from rings.services.brown_reid import brown_reid_spec

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FORBIDDEN = re.compile(r"[^\w\s+\-*^()]")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_TEMPLATE_KEYS = {
    "lambda": "lam",
    "mu": "mu",
    "d": "d",
    "e": "e",
    "alpha": "alpha",
    "beta": "beta",
}


def parse_field(text):
    """Parse `Q`, `GF <p>` or `GF:<p>` into (name, characteristic)."""
    tokens = text.replace(":", " ").split()
    if tokens in (["Q"], ["QQ"]):
        return "Q", None
    if len(tokens) == 2 and tokens[0] == "GF" and tokens[1].isdigit():
        return "GF", int(tokens[1])
    raise ValueError(f"expected 'Q' or 'GF <prime>', got {text!r}")


def parse_ring_spec(text, field=None):
    """Parse a ring-spec document; `field` = (name, p) overrides its field line."""
    declared_field = ("Q", None)
    names, weights, relation_lines = [], [], []
    kind = None
    template = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace("−", "-")
        directive = line.strip()
        if not directive:
            continue
        start = line.index(directive) + 1
        keyword_text, *remainder = directive.split(None, 1)
        rest = remainder[0].strip() if remainder else ""
        column = line.index(rest, start - 1 + len(keyword_text)) + 1 if rest else start + len(keyword_text)

        if keyword_text == "field":
            try:
                declared_field = parse_field(rest)
            except ValueError as exc:
                raise RingSpecSyntaxError(str(exc), number, column)
        elif keyword_text == "var":
            name, weight = _parse_variable(rest, number, column)
            if name in names:
                raise RingSpecSyntaxError(f"variable {name!r} declared twice", number, column)
            names.append(name)
            weights.append(weight)
        elif keyword_text == "rel":
            if not rest:
                raise RingSpecSyntaxError("empty relation", number, column)
            relation_lines.append((number, column, rest))
        elif keyword_text == "kind":
            if rest not in KIND_TO_A:
                raise RingSpecSyntaxError(f"kind must be flip or flop, got {rest!r}", number, column)
            kind = rest
        elif keyword_text == "template":
            template = (number, _parse_template(rest, number, column))
        else:
            raise RingSpecSyntaxError(f"unknown directive {keyword_text!r}", number, start)

    name, characteristic = field or declared_field
    domain = field_domain(name, characteristic)

    if template is not None:
        number, parameters = template
        if names or relation_lines:
            raise RingSpecSyntaxError("template cannot be combined with var or rel lines", number, 1)
        return brown_reid_spec(**parameters, domain=domain, kind=kind or FLIP)

    if not names:
        raise RingSpecError("no variables declared", code="syntax")
    base = GradedRing(Weighting(tuple(names), tuple(weights)), domain)
    relations = [
        _parse_relation(expression, number, column, base)
        for number, column, expression in relation_lines
    ]
    spec = RingSpec(base, tuple(relations), kind or UNSPECIFIED)
    logger.info(f"Parsed {spec} (p={spec.p}, q={spec.q}, r={spec.r}, s={spec.s})")
    return spec


def serialize_ring_spec(spec):
    """Canonical document for `spec`; parse_ring_spec inverts it."""
    lines = [f"field {field_label(spec.domain)}"]
    if spec.parameters is not None:
        lines.append(f"template brown-reid {spec.parameters.as_template()}")
        if spec.kind != FLIP:
            lines.append(f"kind {spec.kind}")
        return "\n".join(lines) + "\n"
    for name, weight in zip(spec.weighting.names, spec.weighting.weights):
        lines.append(f"var {name} {weight}")
    for relation in spec.relations:
        lines.append(f"rel {relation}")
    if spec.kind != UNSPECIFIED:
        lines.append(f"kind {spec.kind}")
    return "\n".join(lines) + "\n"


def _parse_variable(rest, number, column):
    tokens = rest.split()
    if len(tokens) != 2:
        raise RingSpecSyntaxError("expected 'var <name> <integer-weight>'", number, column)
    name, weight = tokens
    if not _NAME.fullmatch(name) or keyword.iskeyword(name):
        raise RingSpecSyntaxError(f"invalid variable name {name!r}", number, column)
    try:
        return name, int(weight)
    except ValueError:
        raise RingSpecSyntaxError(
            f"weight must be an integer, got {weight!r}", number, column + rest.index(weight, len(name))
        )


def _parse_template(rest, number, column):
    tokens = rest.split()
    if not tokens or tokens[0] != "brown-reid":
        raise RingSpecSyntaxError("only the brown-reid template is available", number, column)
    values = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        token_column = column + rest.index(token)
        if not sep or key not in _TEMPLATE_KEYS:
            raise RingSpecSyntaxError(f"unknown template parameter {token!r}", number, token_column)
        try:
            values[_TEMPLATE_KEYS[key]] = int(value)
        except ValueError:
            raise RingSpecSyntaxError(f"{key} must be an integer, got {value!r}", number, token_column)
    missing = [key for key, field in _TEMPLATE_KEYS.items() if field not in values]
    if missing:
        raise RingSpecSyntaxError(f"missing template parameters: {', '.join(missing)}", number, column)
    return values


def _parse_relation(expression, number, column, base):
    forbidden = _FORBIDDEN.search(expression)
    if forbidden:
        raise RingSpecSyntaxError(
            f"unexpected character {forbidden.group()!r}", number, column + forbidden.start()
        )
    symbols = {str(symbol): symbol for symbol in base.ring.symbols}
    for match in _NAME.finditer(expression):
        if match.group() not in symbols:
            raise RingSpecSyntaxError(
                f"undeclared variable {match.group()!r}", number, column + match.start()
            )
    try:
        parsed = parse_expr(expression, local_dict=symbols, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError) as exc:
        offset = getattr(exc, "offset", None) or 1
        raise RingSpecSyntaxError(f"cannot parse {expression!r}", number, column + offset - 1)
    try:
        poly = base.ring.from_expr(parsed)
    except (ValueError, CoercionFailed):
        raise RingSpecSyntaxError(f"{expression!r} is not a polynomial", number, column)
    return base.wrap(poly)
