from .backends import (EXACT, ExactBackend, QuantizedFloatBackend, ScalarBackend, format_rational,
                       get_backend, parse_rational)
from .primitives import (CanonicalCircle, CanonicalLine, CurveKey, Point, canonical_line, circle_through,
                         line_through, on_curve, perpendicular_bisector, rational_circle_point,
                         reflect_over_line, side_of_line, squared_distance)
from .pointset import PointSet
from .lineindex import LineIndex
