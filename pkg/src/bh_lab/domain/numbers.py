"""Numeric literals shared by the constants service."""

import math

SQRT_PI = math.sqrt(math.pi)
LOG_SQRT_PI = 0.5 * math.log(math.pi)
LN2 = math.log(2.0)
