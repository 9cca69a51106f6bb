"""Hopf algebras of operadic forests, their realizations on words, and
the quotient constructions built on them."""

from .core import (
    EMPTY_FOREST,
    Forest,
    LEAF,
    NodeTable,
    Signature,
    Term,
    TermSyntaxError,
    admissible_pairs,
    compose,
    enumerate_forests,
    enumerate_terms,
    forest_arity,
    forest_degree,
    forest_depth,
    forest_str,
    node_table,
    parse_forest,
    parse_term,
    partial_compose,
    reduce_forest,
    restrict,
    term_arity,
    term_degree,
    term_str,
)
from .hopf import (
    LinComb,
    TensorComb,
    antipode,
    antipode_basis,
    classify_profile,
    coproduct,
    coproduct_basis,
    coproduct_basis_fact,
    counit,
    hilbert_dims,
    product,
)
from .alphabets import (
    Alphabet,
    LengthAlphabet,
    PositionAlphabet,
    WordPoly,
    disjoint_sum,
    is_compatible,
    leading_forest,
    pos_word,
    project_lengths,
    realize,
    realize_basis,
    theta_split,
    word_weight,
)
from .quotients import (
    content,
    fdb_coproduct,
    infix,
    int_compose,
    mas_arity,
    mas_compose,
    mas_coproduct,
    phi_expand,
    phr_coproduct,
    project_forest,
    project_term,
    realize_quotient,
)
from .nck import (
    TrimmedForest,
    TrimmedTree,
    charge,
    length_polynomial,
    mas_lengths_expand,
    nck_coproduct,
    nck_coproduct_basis,
    nck_product,
    parse_trimmed,
    trim,
    trimmed_str,
    untrim,
    untrim_one,
)
from .wqsym import (
    m_polynomial,
    pack,
    wqsym_decompose,
)

__version__ = "0.1.0"
