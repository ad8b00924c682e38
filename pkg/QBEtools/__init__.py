#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from . import utils as utils
from . import hilbert as hilbert
from . import isometry as isometry
from . import halmos_wallen as halmos_wallen
from . import dynamics as dynamics
from . import qtm as qtm
from . import cli as cli

from .config import Config, ToleranceContext
from .exceptions import *
from .wrappers import *
