#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import math
import re

_FLOAT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
COMPLEX_LITERAL = re.compile(rf"^([+-]?{_FLOAT})([+-])({_FLOAT})i$")


def parse_complex_literal(token):
    """ Returns the complex value of a `<float>(+|-)<float>i` literal, or None when the
        token does not match the grammar """

    match = COMPLEX_LITERAL.match(token)
    if not match:
        return None
    real, sign, imag = match.groups()
    imag = float(imag)
    return complex(float(real), -imag if sign == "-" else imag)


def format_complex_literal(value, digits=17):
    """ Returns `value` written as a `<float>(+|-)<float>i` literal """

    value = complex(value)
    real = _format_float(value.real, digits)
    imag = _format_float(abs(value.imag), digits)
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{real}{sign}{imag}i"


def _format_float(x, digits):
    text = f"{x:.{digits}g}"
    if "e" not in text and "." not in text and "inf" not in text and "nan" not in text:
        text += ".0"
    return text
