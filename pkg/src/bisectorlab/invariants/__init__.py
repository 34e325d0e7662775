from .curves import (CurveTable, PairRefinement, RichnessProfile, build_curve_table, heaviness_matrix,
                     pair_heaviness, refine_pairs, rich_pair_triples, richness_profile)
from .bisectors import (EnergyBand, EnergyReport, MultiplicityMap, banded_energy_sweep, best_heavy_circle_bound,
                        bisector_energy, conjectured_energy_ratio, cs_lower_bound, distinct_bisectors,
                        energy_bound_expression, energy_report, full_refinement, heavy_circle_lower_bound,
                        multiplicity_map)
from .distances import (DistanceMultiplicities, PinnedProfile, distance_multiplicities, distinct_distance_count,
                        isoceles_count, isoceles_lower_form, pinned_lower_bound_check, pinned_profile,
                        weighted_incidences_with_bisectors)
from .wszt import (NormTriple, WeightedLines, WeightedPoints, band_facts, bisector_instance, cube_root_enclosure,
                   decomposed_incidence_count, dyadic_weight_bands, load_weighted_instance, norms,
                   weighted_incidence_count, wszt_rhs, wszt_rhs_enclosure)
