"""quograph: exact walk-regular partitions, quotient polynomials, and the
association schemes generated by quotient-polynomial graphs."""

from .errors import (AnalysisError, ContractViolationError, GraphInputError,
                     QuographError, SizeLimitError, ToleranceError)
from .exact import Polynomial, eval_poly, frac_str, mat_mul, rank, solve
from .graphs import (DistanceData, Graph, build_graph, circulant,
                     complete_graph, cycle_graph, distance_class_matrix,
                     distances, path_graph, petersen_graph, prism_y6,
                     star_graph)
from .partitions import (LocalPartition, PairPartition,
                         adjacency_power_ladder, check_regular,
                         global_partition, is_distance_faithful,
                         local_partition, walk_vectors)
from .quotient import (QuotientReport, WalkCountMatrices, algebra_dimension,
                       algebra_membership, decide_quotient_polynomial,
                       intersection_matrix, local_dimension,
                       per_vertex_consistency, walk_count_matrices)
from .schemes import (AssociationScheme, ClassificationFlags, build_scheme,
                      generates_scheme_check, is_distance_polynomial,
                      is_distance_regular, is_h_punctually_walk_regular,
                      is_walk_regular, qp_implies_dp)
from .spectral import (SpectralDecomposition, Spectrum, Tolerances,
                       b_via_trace, crossed_multiplicities,
                       graph_scalar_product, spectral_decomposition,
                       spectrum_partition)
from .orbits import (OrbitPartition, automorphisms, is_orbit_polynomial,
                     orbit_partition)
from .formats import (parse_circulant, parse_edge_list, parse_graph6,
                      parse_graph_spec)
from .report import (AnalysisOptions, Report, analyze, census,
                     report_from_dict, report_to_dict, report_to_json,
                     report_to_text)

__version__ = "0.1.0"
