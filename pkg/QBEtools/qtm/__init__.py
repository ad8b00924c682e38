#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .rules import *
from .step_operator import *
from .condition_x import *
from .gram_conditions import *
from .deterministic import *
from .norm_profile import *
from .machines import *
from .closed_forms import *
from .stable_bases import *
from .decide import *
