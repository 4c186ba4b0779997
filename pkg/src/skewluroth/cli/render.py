"""Text forms of values.  Plain output parses back to the same value."""

from __future__ import annotations

import re

from ..quatfunc import QuatFunc
from ..ratfunc import RatFunc
from ..skewfield import SkewFrac, SkewPoly

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render(value, var: str | None = None) -> str:
    if isinstance(value, (SkewFrac, SkewPoly)):
        return value.to_str(var or "T")
    if isinstance(value, QuatFunc):
        return value.to_str(var or "X")
    if isinstance(value, RatFunc):
        return value.to_str(var or "X")
    return str(value)


def prettify(text: str) -> str:
    """Unicode math: superscript powers, implicit products, real minus signs."""
    text = re.sub(r"\^(\d+)", lambda m: m.group(1).translate(_SUPERSCRIPT), text)
    text = re.sub(r"(\d+/\d+)\*", r"(\1)", text)
    text = re.sub(r"(?<=[\w)⁰¹²³⁴⁵⁶⁷⁸⁹])\*(?=[A-Za-z(])", "", text)
    text = text.replace("*", "·")
    return re.sub(r"(?<=[^\s(=,:^])([+-])", r" \1 ", text).replace("-", "−")
