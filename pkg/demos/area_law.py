"""Block entropy saturation away from the critical point.

With a finite transverse field the ground state is gapped, and the entropy
of a block of L sites stops growing once L passes the correlation length.
Print the entropy curve for a long chain and watch it flatten.
"""

import numpy as np

from kitaevchain import ChainParams, block_entropy_curve


def main():
    n_sites = 1000
    for h in (0.5, 1.0, 2.0):
        p = ChainParams(n_sites, 1.0, 1.0, h)
        lens = list(range(2, 81, 2))
        curve = dict(block_entropy_curve(p, lens))
        print(f"h = {h}")
        prev = None
        for block_len in lens:
            s = curve[block_len]
            step = "" if prev is None else f"  (+{s - prev:.3e})"
            if block_len <= 20 or block_len % 20 == 0:
                print(f"  L={block_len:3d}  S={s:.10f}{step}")
            prev = s
        tail = np.array([curve[block_len] for block_len in lens[-10:]])
        print(f"  plateau spread over last 10 points: {tail.max() - tail.min():.3e}")
        print()


if __name__ == "__main__":
    main()
