"""The weight (1, 1, t^-2): a two dimensional weight space inside a six dimensional generalized one, with a square zero endomorphism."""
import dahalab

params = dahalab.Parameters(suite='nilpotent')
