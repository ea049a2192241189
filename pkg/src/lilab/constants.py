"""Shared numerical constants."""

import math

# Euler-Mascheroni constant, 30 significant digits (rounds to the nearest
# double on assignment; the full string is kept for documentation and for
# regenerating extended-precision data).
EULER_GAMMA = 0.577215664901532860606512090082

EULER_GAMMA_STR = "0.577215664901532860606512090082"

LOG_2PI = math.log(2.0 * math.pi)

# default cap on |S_F| used for oscillatory tail bounds; validated for the
# bundled zeta table up to its coverage height
DEFAULT_S_CAP = 4.0
