"""Newton strata of Iwahori double cosets in extended affine Weyl groups.

Typical use::

    >>> from newtonstrata import build_root_datum, parse_element, minimal_newton
    >>> G = build_root_datum("GL:2")
    >>> minimal_newton(G, parse_element("t[1,0]*s1", G))
    SigmaClass(nu=(1/2,1/2), kappa=[1])
"""

from .affine import (AffineWeylElt, SearchBudgetExceeded, alcove_offset, bruhat_leq, delta_of,
                     eta, inv, kappa, length, min_length_in_class, mul, shrunken_status)
from .alcove import (AlcoveCertificate, NotAnAlcove, all_minimal_pairs, basic_nonempty,
                     find_minimal_pair, is_alcove_element, minimal_newton, normalize,
                     virtual_dimension)
from .lang import ResidueFieldTooSmall, TruncatedSeries, residual, solve_lang
from .oracle import EMPTY, StrataTable, dim_adlv, gap_search, reduce, strata_table
from .parse import DimensionMismatch, ParseError, format_element, parse_element
from .plot import PlotSpec, RankTooLarge, plot_apartment
from .rootdatum import FiniteWeylElt, InvalidDatum, NonStableJ, Pi1Element, RootDatum, build_root_datum
from .sigma import (SigmaClass, basic_class, class_of, defect, enumerate_segment, is_basic, leq,
                    levi_transfer, newton_point)

__version__ = "0.1.0"
