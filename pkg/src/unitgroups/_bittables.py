"""Byte lookup tables shared by both kernel backends.

SPREAD8 maps a byte b to the 16-bit word whose even positions carry the
bits of b (squaring a GF(2) polynomial doubles every exponent), COMPRESS8
inverts that on even positions (square root of an even-exponent
polynomial).
"""

import numpy as np

_idx = np.arange(256, dtype=np.uint64)

SPREAD8 = np.zeros(256, dtype=np.uint64)
for _i in range(8):
    SPREAD8 |= ((_idx >> np.uint64(_i)) & np.uint64(1)) << np.uint64(2 * _i)

SPREAD8_U16 = SPREAD8.astype(np.uint16)

COMPRESS8 = np.zeros(256, dtype=np.uint64)
for _i in range(4):
    COMPRESS8 |= ((_idx >> np.uint64(2 * _i)) & np.uint64(1)) << np.uint64(_i)

COMPRESS8_U8 = COMPRESS8.astype(np.uint8)

del _idx, _i
