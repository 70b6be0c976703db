"""The weight (t^-2, 1), whose induced module is a non-split extension of the sign and trivial induced modules."""
import dahalab

params = dahalab.Parameters(suite='nondescending')
