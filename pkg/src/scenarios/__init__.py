from .closed_forms import eq18_closed_form, eq21_closed_form, eq29_closed_form, hom_dip_closed_form
from .curves import (
    CurveMode, CurvePoint, CurveSpec, FIGURE_PANELS, SCENARIOS, Scenario, figure_curves, figure_scenarios,
    hom_dip_curve, interferometer_curve, pol_entangled_curve, pol_product_curve,
)
