from .geometry import (CanonicalCircle, CanonicalLine, Point, PointSet, circle_through, line_through, on_curve,
                       perpendicular_bisector, reflect_over_line, squared_distance)
from .invariants import (bisector_energy, build_curve_table, cs_lower_bound, distinct_bisectors, isoceles_count,
                         multiplicity_map, pinned_profile, refine_pairs, richness_profile)
