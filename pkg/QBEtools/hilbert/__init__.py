#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .lattice import *
from .operator import *
from .shifts import *
from .projector import *
from .pauli import *
from .site_unitary import *
from .is_projection import *
from .hermitian_sqrt import *
