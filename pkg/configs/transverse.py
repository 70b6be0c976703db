"""A transverse descending weight at n = 3 whose stabilizer after gamma is S_2 x S_1."""
import dahalab


def params(weight: str = 't^0,t^-2,t^5') -> dahalab.Parameters:
    return dahalab.Parameters(
        suite='chisuite',
        n=3,
        regime='GL',
        weight=weight,
        dimension=2,
        multipartitions=2,
    )
