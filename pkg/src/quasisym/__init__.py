"""Quasilattices, metallic means, and similarity symmetry in the plane.

The package models point sets with n-fold rotational symmetry as integer
combinations of roots of unity, the metallic means (golden, silver,
1 + sqrt(3)) as exact quadratic integers, similarity groups K/L/M with their
orbits and symbols, and the conformal/anticonformal maps (squaring,
inversion, Mobius, stereographic) that act on those sets.
"""

from .algebra import (
    INFINITY,
    CircleSpec,
    GeneratorMatrix,
    MetallicMean,
    MobiusMap,
    QuadraticInteger,
    RelationReport,
    check_generator_relations,
    circle_inversion,
    euler_phi,
    is_infinity,
    metallic_power,
    metallic_power_pair,
    mobius_apply,
    mobius_compose,
    mobius_decompose,
    quad_mul,
    recurrence_sequence,
)
from .conformal import (
    CircleImageReport,
    ConformalityReport,
    MapImage,
    MapSpec,
    SpherePoint,
    circle_image_check,
    conformality_check,
    fit_circle,
    fit_line,
    fit_plane,
    hexagonal_boundary_rows,
    inverse_stereographic,
    invert_sphere3d,
    map_point,
    map_set,
    special_points_of_inversion_rows,
    special_points_of_inverted_square,
)
from .jsonio import (
    DocumentError,
    PointRecord,
    PointSetDocument,
    TilingDocument,
    dumps_pointset,
    dumps_tiling,
    loads_pointset,
    loads_tiling,
    read_pointset,
    read_tiling,
    write_pointset,
    write_tiling,
)
from .quasilattice import (
    INFLATION_MASKS,
    STANDARD_ORDERS,
    CrystalSet,
    CyclotomicPoint,
    SelfSimilarityReport,
    dedup_embeddings,
    generate_periodic,
    generate_quasilattice,
    inflate_point,
    inflation_factor,
    point_group_order,
    reflect_point,
    roots_of_unity,
    rotate_point,
    sets_match,
    verify_self_similarity,
)
from .svg import DEFAULT_PALETTE, RenderOptions, write_svg
from .symmetry import (
    Similarity2D,
    Similarity3D,
    SimilarityGroup,
    SymbolParseError,
    apply_similarity2d,
    apply_similarity3d,
    compose_similarity2d,
    compose_similarity3d,
    default_coefficient,
    fixed_point_check,
    inverse_similarity2d,
    orbit,
    parse_symbol,
    random_words,
)
from .tiling import (
    COLOR_SCHEMES,
    Tiling,
    build_tiling,
    color_partition,
    color_symmetry_check,
    edges_by_nearest_neighbors,
    radial_shells,
    sector_partition,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "CircleSpec",
    "GeneratorMatrix",
    "MetallicMean",
    "MobiusMap",
    "QuadraticInteger",
    "RelationReport",
    "check_generator_relations",
    "circle_inversion",
    "euler_phi",
    "is_infinity",
    "metallic_power",
    "metallic_power_pair",
    "mobius_apply",
    "mobius_compose",
    "mobius_decompose",
    "quad_mul",
    "recurrence_sequence",
    "CircleImageReport",
    "ConformalityReport",
    "MapImage",
    "MapSpec",
    "SpherePoint",
    "circle_image_check",
    "conformality_check",
    "fit_circle",
    "fit_line",
    "fit_plane",
    "hexagonal_boundary_rows",
    "inverse_stereographic",
    "invert_sphere3d",
    "map_point",
    "map_set",
    "special_points_of_inversion_rows",
    "special_points_of_inverted_square",
    "DocumentError",
    "PointRecord",
    "PointSetDocument",
    "TilingDocument",
    "dumps_pointset",
    "dumps_tiling",
    "loads_pointset",
    "loads_tiling",
    "read_pointset",
    "read_tiling",
    "write_pointset",
    "write_tiling",
    "INFLATION_MASKS",
    "STANDARD_ORDERS",
    "CrystalSet",
    "CyclotomicPoint",
    "SelfSimilarityReport",
    "dedup_embeddings",
    "generate_periodic",
    "generate_quasilattice",
    "inflate_point",
    "inflation_factor",
    "point_group_order",
    "reflect_point",
    "roots_of_unity",
    "rotate_point",
    "sets_match",
    "verify_self_similarity",
    "DEFAULT_PALETTE",
    "RenderOptions",
    "write_svg",
    "Similarity2D",
    "Similarity3D",
    "SimilarityGroup",
    "SymbolParseError",
    "apply_similarity2d",
    "apply_similarity3d",
    "compose_similarity2d",
    "compose_similarity3d",
    "default_coefficient",
    "fixed_point_check",
    "inverse_similarity2d",
    "orbit",
    "parse_symbol",
    "random_words",
    "COLOR_SCHEMES",
    "Tiling",
    "build_tiling",
    "color_partition",
    "color_symmetry_check",
    "edges_by_nearest_neighbors",
    "radial_shells",
    "sector_partition",
]
