#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError

import functools
import json
import pkgutil

import jsonschema


@functools.lru_cache(maxsize=1)
def load_schema():
    """ Returns the report schema shipped with the package """

    return json.loads(pkgutil.get_data("QBEtools", "schemas/report.schema.json").decode("utf-8"))


def validate_report(payload, kind):
    """ Validates a JSON report of the given kind (verdict, analysis, decomposition,
        counterexample, error), raising jsonschema.ValidationError on mismatch """

    schema = load_schema()
    if kind not in schema["definitions"]:
        raise PreconditionError(f"no schema for report kind {kind!r}")
    jsonschema.validate(payload, {"$ref": f"#/definitions/{kind}", "definitions": schema["definitions"]})
