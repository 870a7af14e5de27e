# -*- coding: utf-8 -*-
"""
rt-cover example.

Shows sphere volumes, verifying an ordered covering array, building a
covering code and asking the bounds engine where a bound comes from.
"""
from logging import INFO
from logging import basicConfig

from rtcover import OrderedArray
from rtcover import RTPoset
from rtcover import k_bounds
from rtcover import ocan_bounds
from rtcover import rt_distance
from rtcover import sphere_volume
from rtcover import verify_covering
from rtcover import verify_oca
from rtcover.acceptance import EXAMPLE_OCA_ROWS
from rtcover.codes import two_chain_code


if __name__ == '__main__':
    basicConfig(level=INFO)

    # Two blocks of depth 3: labels 1..3 form block 0, 4..6 block 1.
    poset = RTPoset(2, 3)
    # Only the highest nonzero position of each block counts.
    print('Distance: ',
          rt_distance(poset, (0, 1, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0)))
    print('Ball volume V_2(2,3,3): ', sphere_volume(2, 2, 3, 3))

    # An OCA(5;2,4,2,2): every 2-anti-ideal sees all four binary pairs.
    array = OrderedArray(EXAMPLE_OCA_ROWS, t=2, m=4, s=2, v=2)
    print(verify_oca(array).to_text())

    # Six words covering Z_2^6 with radius 3.
    code = two_chain_code(2, 3)
    print(verify_covering(code).to_text())

    # Bounds with the rules behind them.
    record = k_bounds(2, 2, 3, 3)
    print(record, 'lower by', record.lower_rules, 'upper by',
          record.upper_rules)
    # The witness is built and verified on first access.
    print('Witness: ', record.witness())

    print(ocan_bounds(2, 4, 2, 2))
