"""Exact and asymptotic partition functions of vicious walkers with wall contacts."""
from .asym import AsymptoticEstimate, convergence_report, mean_asym, z_asym_leading
from .core import (
    ContactPolynomial,
    DomainError,
    NotDivisibleError,
    WalkerSpec,
    WatermelonSpec,
    binom_gen,
    binom_nat,
    pochhammer,
)
from .formulas import (
    z_cor5,
    z_kappa1,
    z_kappa2,
    z_thm4,
    z_thm8,
    z_thm9,
    z_thm11,
)
from .lgv import det_6_1, n_fixed_contacts, z_det_deviation0, z_det_general, z_det_watermelon
from .oracle import PathFamily, contacts, enumerate_contact_polynomial, enumerate_families
from .stats import mean_contacts, mean_kappa1, mean_kappa2_y0, normalized_mean
from .tableaux import SemistandardTableau, prop6_forward, prop6_inverse, walkers_to_tableau
from .walks1 import catalan_power_coeff, z1_exact, z1_gf
