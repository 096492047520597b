"""cyforge: exact symbolic algebra for quivers with potentials.

Core objects: graded quivers, noncommutative polynomials, potentials up to
signed rotation, dg tensor algebras, Ginzburg dg algebras and their deformed
completions, truncated Jacobian algebras, the small Hochschild/cyclic
complex, DWZ pre-mutation, and the degree-3 pairing verification machinery.
"""

from .core import Arrow, GradedQuiver, NcPoly, Path, compose, koszul_sign, mul
from .dg import (
    D2Report,
    Differential,
    DgTensorAlgebra,
    check_d_squared,
    check_filtration_triangular,
    leibniz_extend,
)
from .potential import (
    HochschildOneChain,
    Potential,
    canonicalize,
    connes_B,
    cyclic_derivative,
    necklace_check,
    supercommutator,
)
from .completion import (
    ExtendedQuiver,
    GinzburgAlgebra,
    TruncatedQuotient,
    TwoTermBimoduleComplex,
    cy_completion,
    extended_quiver,
    ginzburg,
    inverse_dualizing_presentation,
    jacobian_quotient,
    qp_from_gldim2,
)
from .hochschild import CyclicChain0, SmallComplexSlice, alpha, beta, hc_dims, hh_dims
from .mutation import (
    MutationHistory,
    QuiverWithPotential,
    delete_vertex,
    premutate,
    reduce_trivial,
)
from .ncgeom import (
    AinftyTable,
    BiTensor,
    DoubleDeriv,
    PGenerator,
    TGen,
    apply_double_deriv,
    canonical_E,
    check_nondegenerate,
    check_pairing_compat,
    double_sn_bracket,
    euler_element,
    ext_ainfty,
    pairing_P,
)
from .io_doc import emit_qp, export_dot, parse_qp

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
