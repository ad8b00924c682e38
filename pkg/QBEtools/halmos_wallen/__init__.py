#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .defect_chain import *
from .decompose import *
from .hw_lemma import *
from .tower import *
