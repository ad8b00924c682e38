#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .hamiltonian import *
from .spectrum import *
from .predictions import *
from .verify import *
from .evolve import *
from .reconstruct import *
from .continuum import *
