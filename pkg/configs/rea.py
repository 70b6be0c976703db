"""Hecke relation, Yang-Baxter equation and the central quantum determinant of the reflection equation algebra."""
import dahalab


def params(N: int = 2, full: bool = False) -> dahalab.Parameters:
    return dahalab.Parameters(
        suite='rea-check',
        N=N,
        full=full,
    )
