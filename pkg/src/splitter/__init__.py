from .beam_splitter import BALANCED, BeamSplitterParams, CreationCoefficients, bs_matrix, creation_substitution
from .transform import OutputState, PortPair, propagate, sector_norm, transform
from .coincidence import (
    coincidence_probability, coincidence_probability_formula, predicted_coincidence, product_state_cp,
)
