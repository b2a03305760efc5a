"""Text front end: integral expressions and direct family calls.

Two input forms are accepted::

    Omega(alpha=0, mu=1, nu=0, a=2, b=1)
    int x^0.5 * J[0](2 x) * J[1](3 x) dx

The integral grammar (whitespace is insignificant)::

    integral := 'int' term ('*' term)* 'dx'
    term     := 'x' ['^' value]
              | ('J' | 'Y' | 'I' | 'K') '[' value ']' '(' [value ['*']] 'x' ')'
              | 'C' '[' value ']' '(' [value ['*']] 'x' ['^' '2'] ')'
              | ('ln' | 'log') '(' [value ['*']] 'x' ')'
              | 'exp' '(' '-' [value ['*']] 'x' '^' '2' ')'
    value    := ['-' | '+'] number ['/' number] | '(' value ')'

Numbers are decimal literals; ``1/2`` style rationals are folded to floats.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .closed_forms import FAMILY_PARAMS, FamilyInvocation
from .errors import NoMatchError, ParseError
from .specfun.series import DEFAULT_CONFIG

BESSEL_KINDS = ("J", "Y", "I", "K")

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()\[\],=]))"
)


@dataclass(frozen=True)
class Factor:
    """One non-power factor of an integrand.

    ``kind`` is one of J, Y, I, K (Bessel-type of order ``order`` at ``scale * x``),
    C (Tricomi-Bessel at ``scale * x`` or ``scale * x^2`` when ``squared``),
    Log (``ln(scale * x)``) or GaussExp (``exp(-scale * x^2)``).
    """

    kind: str
    scale: float = 1.0
    order: float | None = None
    squared: bool = False

    def __str__(self):
        arg = "x^2" if self.squared or self.kind == "GaussExp" else "x"
        lin = arg if self.scale == 1 else f"{_fmt(self.scale)} {arg}"
        if self.kind == "Log":
            return f"ln({lin})"
        if self.kind == "GaussExp":
            return f"exp(-{lin})"
        return f"{self.kind}[{_fmt(self.order)}]({lin})"


@dataclass(frozen=True)
class RawIntegrand:
    power_exponent: float = 0.0
    factors: tuple = field(default_factory=tuple)

    def __str__(self):
        terms = [str(f) for f in self.factors]
        if self.power_exponent != 0:
            terms.insert(0, f"x^{_fmt(self.power_exponent)}")
        return "int " + " * ".join(terms) + " dx"


def _fmt(v):
    v = float(v)
    return str(int(v)) if v.is_integer() else repr(v)


_KEYWORDS = frozenset(
    {"int", "dx", "x", "exp", "ln", "log", "true", "false", "True", "False", *BESSEL_KINDS, "C"}
    | set(FAMILY_PARAMS) | {name for names in FAMILY_PARAMS.values() for name in names}
)


def _split_name(word):
    """Split a run like ``intx`` into keywords; None if it is not a keyword sequence."""
    best = {0: []}
    for i in range(len(word)):
        if i not in best:
            continue
        for j in range(len(word), i, -1):
            if word[i:j] in _KEYWORDS and j not in best:
                best[j] = best[i] + [(i, word[i:j])]
    return best.get(len(word))


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                stripped = len(text) - len(text[pos:].lstrip())
                if stripped == len(text):
                    break
                raise ParseError(f"unexpected character {text[stripped]!r}", stripped)
            kind = m.lastgroup
            word, start = m.group(kind), m.start(kind)
            parts = _split_name(word) if kind == "name" and word not in _KEYWORDS else None
            if parts:
                self.items.extend(("name", w, start + off) for off, w in parts)
            else:
                self.items.append((kind, word, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def accept(self, value):
        if self.peek()[1] == value and self.peek()[0] != "end":
            return self.take()
        return None

    def expect(self, *values):
        tok = self.peek()
        if tok[0] == "end" or tok[1] not in values:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"unexpected {found}", tok[2], [repr(v) for v in values])
        return self.take()

    def fail(self, message, expected=()):
        raise ParseError(message, self.peek()[2], expected)


def _value(tok):
    if tok.accept("("):
        v = _value(tok)
        tok.expect(")")
        return v
    sign = -1.0 if tok.accept("-") else 1.0
    if sign > 0:
        tok.accept("+")
    kind, text, pos = tok.peek()
    if kind != "num":
        tok.fail("expected a number", ["number"])
    tok.take()
    v = float(text)
    if tok.peek()[1] == "/" and tok.peek()[0] == "op":
        tok.take()
        kind, text, pos = tok.peek()
        if kind != "num":
            tok.fail("expected a denominator", ["number"])
        tok.take()
        den = float(text)
        if den == 0:
            raise ParseError("zero denominator", pos)
        v /= den
    return sign * v


def _linear(tok, allow_square=False):
    """``[value ['*']] 'x' ['^' '2']`` -> (scale, squared)."""
    scale = 1.0
    kind, text, pos = tok.peek()
    if kind == "num" or text in ("-", "+", "("):
        scale = _value(tok)
        tok.accept("*")
    if not scale > 0:
        raise ParseError(f"scales must be positive, got {scale}", pos)
    tok.expect("x")
    squared = False
    if allow_square and tok.accept("^"):
        at = tok.peek()[2]
        if _value(tok) != 2:
            raise ParseError("only x^2 is allowed here", at, ["2"])
        squared = True
    return scale, squared


def _term(tok):
    kind, text, pos = tok.peek()
    if kind != "name":
        tok.fail("expected a factor", ["x", "J", "Y", "I", "K", "C", "ln", "exp"])
    tok.take()
    if text == "x":
        return ("power", _value(tok) if tok.accept("^") else 1.0)
    if text in BESSEL_KINDS or text == "C":
        tok.expect("[")
        order = _value(tok)
        tok.expect("]")
        tok.expect("(")
        scale, squared = _linear(tok, allow_square=text == "C")
        tok.expect(")")
        return ("factor", Factor(text, scale, order, squared))
    if text in ("ln", "log"):
        tok.expect("(")
        scale, _ = _linear(tok)
        tok.expect(")")
        return ("factor", Factor("Log", scale))
    if text == "exp":
        tok.expect("(")
        tok.expect("-")
        scale, squared = _linear(tok, allow_square=True)
        if not squared:
            raise ParseError("exp needs the form exp(-a x^2)", tok.peek()[2], ["'^'"])
        tok.expect(")")
        return ("factor", Factor("GaussExp", scale))
    raise ParseError(f"unknown factor {text!r}", pos, ["x", "J", "Y", "I", "K", "C", "ln", "exp"])


def _integral(tok):
    tok.expect("int")
    power = None
    factors = []
    while True:
        what, item = _term(tok)
        if what == "power":
            if power is not None:
                tok.fail("at most one power of x is allowed")
            power = item
        else:
            factors.append(item)
        if not tok.accept("*"):
            break
    tok.expect("dx")
    if not factors:
        tok.fail("the integrand needs at least one non-power factor")
    return RawIntegrand(power or 0.0, tuple(factors))


def _bool_or_value(tok):
    text = tok.peek()[1]
    if text in ("true", "false", "True", "False"):
        tok.take()
        return text.lower() == "true"
    return _value(tok)


def _direct(tok, cfg):
    _, family, pos = tok.take()
    names = FAMILY_PARAMS[family]
    tok.expect("(")
    params = {}
    positional = 0
    if not tok.accept(")"):
        while True:
            kind, text, p = tok.peek()
            nxt = tok.items[tok.i + 1][1] if tok.i + 1 < len(tok.items) else ""
            if kind == "name" and nxt == "=":
                if text not in names:
                    raise ParseError(f"{family} has no parameter {text!r}", p, names)
                if text in params:
                    raise ParseError(f"parameter {text!r} given twice", p)
                tok.take()
                tok.take()
                params[text] = _bool_or_value(tok)
            else:
                if params and positional < len(params):
                    tok.fail("positional argument after keyword argument")
                if positional >= len(names):
                    tok.fail(f"{family} takes {len(names)} parameters")
                params[names[positional]] = _bool_or_value(tok)
                positional += 1
            if tok.accept(")"):
                break
            tok.expect(",")
    missing = [n for n in names if n not in params]
    if missing:
        raise ParseError(f"{family} is missing {', '.join(missing)}", tok.peek()[2], missing)
    if family == "TricomiInt":
        params["squared"] = bool(params["squared"])
    return FamilyInvocation(family, params, cfg)


def parse(text, cfg=DEFAULT_CONFIG):
    """Parse a direct family call or an integral expression.

    Returns a :class:`FamilyInvocation` or a :class:`RawIntegrand`.
    """
    if not text or not text.strip():
        raise ParseError("empty input", 0, ["int", "family name"])
    tok = _Tokens(text)
    kind, word, pos = tok.peek()
    if kind == "name" and word in FAMILY_PARAMS:
        result = _direct(tok, cfg)
    elif word == "int":
        result = _integral(tok)
    else:
        raise ParseError(f"unexpected {word!r}", pos, ["int", *FAMILY_PARAMS])
    if tok.peek()[0] != "end":
        tok.fail("trailing input", ["end of input"])
    return result


# ---------------------------------------------------------------------------
# template matching

def _kinds(raw):
    return sorted(f.kind for f in raw.factors)


def _get(raw, kind):
    return next(f for f in raw.factors if f.kind == kind)


def _match_E(raw):
    if _kinds(raw) == ["GaussExp", "Log"]:
        return {"mu": raw.power_exponent, "a": _get(raw, "GaussExp").scale, "b": _get(raw, "Log").scale}


def _match_I(raw):
    if _kinds(raw) == ["J"]:
        j = raw.factors[0]
        return {"mu": raw.power_exponent, "lambda": j.order, "p": j.scale}


def _match_A(raw):
    if _kinds(raw) == ["J", "Log"] and raw.power_exponent == 0:
        j = _get(raw, "J")
        return {"lambda": j.order, "p": j.scale, "b": _get(raw, "Log").scale}


def _unit_order_zero(raw, kind):
    if _kinds(raw) == [kind]:
        f = raw.factors[0]
        if f.order == 0 and f.scale == 1:
            return {"mu": raw.power_exponent}


def _match_Theta(raw):
    return _unit_order_zero(raw, "K")


def _match_Upsilon(raw):
    return _unit_order_zero(raw, "Y")


def _match_Omega(raw):
    if _kinds(raw) == ["J", "J"]:
        # canonical factor order; Omega is symmetric under swapping the two J's
        first, second = sorted(raw.factors, key=lambda f: (f.scale, f.order))
        return {"alpha": raw.power_exponent, "mu": first.order, "nu": second.order,
                "a": first.scale, "b": second.scale}


def _match_Xi(raw):
    if _kinds(raw) == ["J", "Y"]:
        j, y = _get(raw, "J"), _get(raw, "Y")
        return {"alpha": raw.power_exponent, "mu": j.order, "nu": y.order, "a": j.scale, "b": y.scale}


def _match_TricomiInt(raw):
    if _kinds(raw) == ["C"] and raw.power_exponent == 0:
        c = raw.factors[0]
        if c.scale == 1:
            return {"nu": c.order, "squared": c.squared}


def _match_TricomiMoment(raw):
    if _kinds(raw) == ["C"] and raw.power_exponent != 0:
        c = raw.factors[0]
        if c.scale == 1 and c.squared:
            return {"mu": raw.power_exponent, "nu": c.order}


def _match_Psi(raw):
    if _kinds(raw) == ["C", "K"]:
        c, k = _get(raw, "C"), _get(raw, "K")
        if c.squared:
            return {"lambda": raw.power_exponent, "mu": c.order, "nu": k.order,
                    "a": 2 * math.sqrt(c.scale), "b": k.scale}


TEMPLATES = {
    "E": (_match_E, "int x^mu * exp(-a x^2) * ln(b x) dx"),
    "I": (_match_I, "int x^mu * J[lambda](p x) dx"),
    "A": (_match_A, "int J[lambda](p x) * ln(b x) dx"),
    "Theta": (_match_Theta, "int x^mu * K[0](x) dx"),
    "Upsilon": (_match_Upsilon, "int x^mu * Y[0](x) dx"),
    "Omega": (_match_Omega, "int x^alpha * J[mu](a x) * J[nu](b x) dx"),
    "Xi": (_match_Xi, "int x^alpha * J[mu](a x) * Y[nu](b x) dx"),
    "TricomiInt": (_match_TricomiInt, "int C[nu](x) dx  |  int C[nu](x^2) dx"),
    "TricomiMoment": (_match_TricomiMoment, "int x^mu * C[nu](x^2) dx"),
    "Psi": (_match_Psi, "int x^lambda * C[mu](a^2/4 x^2) * K[nu](b x) dx"),
}


def matching_families(raw):
    """All families whose template accepts ``raw`` (at most one by construction)."""
    out = []
    for family, (match, _) in TEMPLATES.items():
        params = match(raw)
        if params is not None:
            out.append((family, params))
    return out


def match_family(raw, cfg=DEFAULT_CONFIG):
    """Recognise a :class:`RawIntegrand` as one of the supported families."""
    found = matching_families(raw)
    if not found:
        listing = "\n  ".join(t for _, t in TEMPLATES.values())
        raise NoMatchError(f"no template matches {raw}; supported:\n  {listing}")
    if len(found) > 1:
        raise AssertionError(f"templates overlap on {raw}: {[f for f, _ in found]}")
    family, params = found[0]
    return FamilyInvocation(family, params, cfg)
