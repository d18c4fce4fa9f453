from .triangular import triangular_factor, triangular_index, TriangularService
from .rectangle import RectangleWitness, rectangle_integral, rectangle_verify, rectangle_witness
