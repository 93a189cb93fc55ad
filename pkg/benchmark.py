#!/usr/bin/env python3
"""
Benchmarks ScatterLab by timing each self-test criterion from :data:`privex.scatterlab.selftest.CRITERIA`,
plus the Cantor-Bendixson profile of :func:`.build_Kn` for ``n`` up to :attr:`.BENCH_KN`.

Set ``BENCH_QUICK=0`` to time the full-size criteria.


**Copyright**::

    +===================================================+
    |                 © 2020 Privex Inc.                |
    |               https://www.privex.io               |
    +===================================================+
    |                                                   |
    |        Privex's ScatterLab                        |
    |        License: X11 / MIT                         |
    |                                                   |
    |        Core Developer(s):                         |
    |                                                   |
    |          (+)  Chris (@someguy123) [Privex]        |
    |                                                   |
    +===================================================+


"""
import time
from privex.helpers import env_int, env_bool
from privex.loghelper import LogHelper

from privex.scatterlab.derive import cb_profile
from privex.scatterlab.families import build_Kn
from privex.scatterlab.selftest import CRITERIA

BENCH_QUICK = env_bool('BENCH_QUICK', True)
BENCH_KN = env_int('BENCH_KN', 8)

LogHelper('privex.scatterlab').add_console_handler()


def main():
    total = 0.0
    for name, fn in CRITERIA:
        start_time = time.time()
        passed, _ = fn(BENCH_QUICK)
        completed_in = round(time.time() - start_time, 3)
        total += completed_in
        print(f"{name:<24} {'ok' if passed else 'FAILED':<7} {completed_in} seconds")
    print(f"All criteria completed in {round(total, 3)} seconds (quick={BENCH_QUICK}).")

    start_time = time.time()
    for n in range(1, BENCH_KN + 1):
        cb_profile(build_Kn(n), n + 2)
    completed_in = round(time.time() - start_time, 3)
    print(f"Profiled K_1 .. K_{BENCH_KN} in {completed_in} seconds.")


main()
