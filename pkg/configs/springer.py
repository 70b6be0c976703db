"""End(Ind_Y(q^rho)) is the opposite group algebra of S_N, on the double affine and on the quantum torus side."""
import dahalab


def params(N: int = 2, regime: str = 'GL') -> dahalab.Parameters:
    return dahalab.Parameters(
        suite='springer',
        n=N,
        N=N,
        regime=regime,
    )
