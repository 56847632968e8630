"""ER-blocks step table.

The raw intensity is the cumulative sum of ``STEP_HEIGHTS`` switched on at
``STEP_TIMES``; it dips below zero on three short intervals, which the
generator clamps after its scale/offset transform.
"""

STEP_TIMES = (0.10, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81)
STEP_HEIGHTS = (4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 5.1, -4.2)

ER_BLOCKS = "er_blocks"
DSBM = "dsbm"
CONSTANT = "constant"
