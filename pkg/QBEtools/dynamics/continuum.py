#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError

import numpy as np
import pandas as pd


def band_energy(W, c, d, m):
    """ Returns (exact, continuum) energies of level m of a bound band of W 0s with
        lattice spacing d and K = c/d² """

    K = c / d ** 2
    D = (W + 2) * d
    k = m * np.pi / (W + 2)
    return 2 * K * (1 - np.cos(k)), c * (m * np.pi / D) ** 2


def continuum_limit_check(W, c, d_values, m_values=(1,)):
    """ Returns a DataFrame comparing bound band levels with the free-particle limit
        c(mπ/D)² while the lattice spacing d shrinks at fixed width D = (W + 2)·d₀.

        The band at spacing d holds W_d 0s with W_d + 2 = D/d; the deviation
        |1 − E_exact/E_continuum| shrinks as O(d²).
    """

    d_values = [float(d) for d in d_values]
    if not d_values or any(d <= 0 for d in d_values):
        raise PreconditionError("lattice spacings must be positive")
    if any(b >= a for a, b in zip(d_values[:-1], d_values[1:])):
        raise PreconditionError("lattice spacings must be strictly decreasing")

    D = (W + 2) * d_values[0]
    records = []
    for m in m_values:
        previous = None
        for d in d_values:
            sites = D / d
            if abs(sites - round(sites)) > 1e-9:
                raise PreconditionError(f"width D={D} is not a whole number of spacings d={d}")
            W_d = int(round(sites)) - 2

            exact, continuum = band_energy(W_d, c, d, m)
            ratio = exact / continuum if continuum != 0 else 1.0
            deviation = abs(1 - ratio)
            records.append({
                "m": m,
                "d": d,
                "W": W_d,
                "D": D,
                "K": c / d ** 2,
                "k": m * np.pi / (W_d + 2),
                "E_exact": exact,
                "E_continuum": continuum,
                "ratio": ratio,
                "deviation": deviation,
                "deviation_ratio": previous / deviation if previous and deviation else np.nan,
            })
            previous = deviation

    return pd.DataFrame.from_records(records)


def width_scan(W_values, c, d, m=1):
    """ Returns a DataFrame of level m at fixed spacing d for growing widths, with
        E·D², which tends to c(mπ)² """

    records = []
    for W in W_values:
        exact, continuum = band_energy(W, c, d, m)
        D = (W + 2) * d
        records.append({"W": W, "D": D, "E_exact": exact, "E_continuum": continuum, "E_D2": exact * D ** 2})
    return pd.DataFrame.from_records(records)
