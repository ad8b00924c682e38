#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .basis import *
from .partial_isometry import *
from .orthogonality import *
from .stability import *
from .paths import *
from .powers import *
