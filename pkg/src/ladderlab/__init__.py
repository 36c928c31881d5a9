"""Numerical lab for mean-field-scaled multi-layer networks.

Trains finite-width networks by gradient flow, extracts the per-layer
ladder of kernels they induce, integrates the closed memory-kernel
dynamics of deep linear networks, and measures approximation /
generalization diagnostics (width-compression error decay, Rademacher
complexity estimates, kernel-target alignment).
"""

from ladderlab.activations import Activation, get_activation
from ladderlab.losses import Loss, get_loss
from ladderlab.nets import (
    InitSpec,
    NetworkState,
    ForwardTrace,
    init_network,
    forward,
    forward_batch,
    group_norm,
    complexity_upper_bound,
    effective_linear_map,
)
from ladderlab.gradflow import (
    GFConfig,
    Trajectory,
    ParamDelta,
    backprop_fields,
    residual_derivatives,
    gf_rhs,
    integrate,
    empirical_risk,
)
from ladderlab.kernels import (
    GramMatrix,
    layer_kernel_gram,
    gamma_gram,
    tangent_gram,
    tangent_cross,
    cka,
    min_norm_in_span,
)
from ladderlab.linear_mf import (
    LinearMFConfig,
    MemoryGrid,
    LinearTrajectory,
    integrate_linear_mf,
    residual,
)
from ladderlab.subsample import DecayTable, subsample_network, mse_decay, theorem_bound
from ladderlab.complexity import (
    AscentConfig,
    RadEstimate,
    rademacher_bound,
    estimate_rademacher,
    depth_sep_target,
    balance_layers,
)

__version__ = "0.1.0"
