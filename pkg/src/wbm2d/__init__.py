"""Wave Based Method solver for interior 2D Helmholtz problems.

The package splits into a small stack of modules:

* :mod:`wbm2d.geometry` - analytic boundary curves and bounding boxes.
* :mod:`wbm2d.wavebasis` - the truncated wave-function set and its matrices.
* :mod:`wbm2d.boundarydata` - incident fields and their boundary traces.
* :mod:`wbm2d.assembly` - weighted-residual and collocation linear systems.
* :mod:`wbm2d.solver` - regularized least-squares solvers (tsvd, cpqr).
* :mod:`wbm2d.experiments` - sweep runner, error metric, presets, CSV.
* :mod:`wbm2d.cli` - the ``wbm`` command line front end.

The names re-exported here cover the common workflow: describe a problem
(curve, box, boundary condition), build a basis spec, assemble a system,
solve it, and measure the boundary error.
"""

from .assembly import LinearSystem, collocation_system, weighted_residual_system
from .boundarydata import (
    BoundaryCondition,
    ConstantField,
    PlaneWave,
    PointSource,
)
from .experiments import (
    ExperimentConfig,
    ExperimentRecord,
    Solution,
    boundary_error,
    evaluate_solution,
    parse_config,
    presets,
    records_to_csv,
    run_sweep,
    write_csv,
)
from .geometry import (
    BoundingBox,
    Crescent,
    Disk,
    InvertedEllipse,
    sample_boundary,
    schwartz_singularities,
)
from .solver import SolveReport, SolverOptions, solve
from .wavebasis import WaveBasisSpec, make_spec, truncation_counts

__version__ = "0.1.0"

__all__ = [
    "BoundaryCondition",
    "BoundingBox",
    "ConstantField",
    "Crescent",
    "Disk",
    "ExperimentConfig",
    "ExperimentRecord",
    "InvertedEllipse",
    "LinearSystem",
    "PlaneWave",
    "PointSource",
    "SolveReport",
    "Solution",
    "SolverOptions",
    "WaveBasisSpec",
    "__version__",
    "boundary_error",
    "collocation_system",
    "evaluate_solution",
    "make_spec",
    "parse_config",
    "presets",
    "records_to_csv",
    "run_sweep",
    "sample_boundary",
    "schwartz_singularities",
    "solve",
    "truncation_counts",
    "weighted_residual_system",
    "write_csv",
]
