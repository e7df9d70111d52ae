"""Free Abelian group on string symbols, with real coefficients."""

from .core import (
    Frab,
    add,
    coefficient_of,
    equals,
    from_pairs,
    negate,
    scalar_multiply,
    subtract,
    sum_of,
    support_size,
    zap,
)
from .disord import (
    DisIndex,
    Disord,
    consistent,
    disord_new,
    filter_by,
    get_by_position,
    map_elementwise,
    zip_elementwise,
)
from .errors import (
    DisciplineError,
    EmptySymbol,
    FrabError,
    LengthMismatch,
    NegativeCount,
    NegativeTolerance,
    NonFiniteCoefficient,
    NonIntegralCount,
    ParseError,
    SerializationError,
)
from .tabulation import merge_counts, read_tokens, reconstruct, tabulate
from .textio import parse_frab_text, render_frab_text
from .views import (
    compare_values,
    extract_by_position,
    extract_by_symbols,
    names_view,
    replace_by_symbol,
    replace_where,
    values_view,
    with_names,
    with_values,
)

__version__ = "0.1.0"
