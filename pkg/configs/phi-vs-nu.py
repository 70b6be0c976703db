"""phi_w against nu_w times the f-factors of its inversions, for w = s1 s2 s0 s1 s2 s0 s1 s2."""
from typing import Optional

import dahalab


def params(word: tuple[int, ...] = (1, 2, 0, 1, 2, 0, 1, 2), alpha: Optional[int] = 5, regime: str = 'GL') -> dahalab.Parameters:
    return dahalab.Parameters(
        suite='intertwiner',
        n=3,
        regime=regime,
        phi_word=list(word),
        alpha=alpha,
    )
