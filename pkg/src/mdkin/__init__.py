"""Higher-order kinematics for a 4-DOF hybrid surgical parallel robot.

Three kinematic formalisms (constraint Jacobians, homogeneous transform
translation fields, dual quaternions), each available in a classical
sequentially-differentiated flavor and a jet-lifted automatic
differentiation flavor, plus a statistical harness that benchmarks
the flavors against each other.
"""

from .multidual import (BACKEND, DEFAULT_ORDER, MAX_ORDER, LiftDomainError,
                        MultiDual, NotInvertibleError)
from .quat import DualQuaternion, Quaternion
from .se3 import MultiDualPose, Pose, higher_order_field, rot_x, rot_y, rot_z
from .geometry import RobotGeometry, load_geometry, save_geometry
from .robot import (END_EFFECTOR_CENSUS, PARALLEL_MODULE_CENSUS,
                    JointClassCount, LevelJacobians, WorkspaceError,
                    jacobians, mobility)
from .solvers import (KinematicSample, PAIRS, SOLVERS, SolverId, solve)
from .trajectory import JerkLimitedProfile, PlannedMotion, plan_rcm_motion
from .harness import (ExperimentConfig, ResidualReport, TimingReport,
                      run_accuracy, run_roundtrip, run_timing,
                      write_reports_json, write_timing_csv)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DEFAULT_ORDER", "MAX_ORDER", "LiftDomainError", "MultiDual",
    "NotInvertibleError", "DualQuaternion", "Quaternion", "MultiDualPose",
    "Pose", "higher_order_field", "rot_x", "rot_y", "rot_z", "RobotGeometry",
    "load_geometry", "save_geometry", "END_EFFECTOR_CENSUS",
    "PARALLEL_MODULE_CENSUS", "JointClassCount", "LevelJacobians",
    "WorkspaceError", "jacobians", "mobility", "KinematicSample", "PAIRS",
    "SOLVERS", "SolverId", "solve", "JerkLimitedProfile", "PlannedMotion",
    "plan_rcm_motion", "ExperimentConfig", "ResidualReport", "TimingReport",
    "run_accuracy", "run_roundtrip", "run_timing", "write_reports_json",
    "write_timing_csv", "__version__",
]
