"""Shared numeric constants.

The constant ``A_SHIFT`` is the shift appearing in the short-interval mean
value ``ln((phi/2) e^{-a})``; ``HL_LINEAR`` is the linear coefficient of the
two-term second-moment asymptotic ``T ln T + HL_LINEAR * T``.
"""
import math

EULER_GAMMA = 0.5772156649015329

LOG_2PI = math.log(2.0 * math.pi)

# a = ln(2*pi) - 1 - gamma ~= 0.2606614015078126
A_SHIFT = LOG_2PI - 1.0 - EULER_GAMMA

# 2*gamma - 1 - ln(2*pi) ~= -1.6834457366062798
HL_LINEAR = 2.0 * EULER_GAMMA - 1.0 - LOG_2PI
