"""
free: Schreier bases, Adyan words and verbal subgroups
"""

from __future__ import annotations

import click

from ..freegrp.perm_groups import FinGroup, format_permutation, parse_permutation_list, verbal_subgroup
from ..freegrp.schreier import POINTS, REGULAR, schreier_basis, schreier_graph
from ..freegrp.words import adyan_word, format_word, parse_word
from ..utils.errors import ParseError
from .output import ResultWriter
from .schemas import AdyanResponse, RunConfig, SchreierResponse, VerbalResponse


@click.group('free')
def free() -> None:
    """Free-group tools"""


@free.command('schreier')
@click.option('--rank', type=int, required=True)
@click.option('--images', required=True, help='Generator images, e.g. "(1 2 3);(1 2)"')
@click.option('--mode', type=click.Choice([REGULAR, POINTS]), default=REGULAR, show_default=True)
@click.pass_obj
def schreier(run: RunConfig, rank: int, images: str, mode: str) -> None:
    """Coset graph and Schreier free basis of the subgroup the images define"""
    graph = schreier_graph(rank, parse_permutation_list(images), mode, run.group_order_cap)
    basis = [format_word(word) for word in schreier_basis(graph)]
    document = SchreierResponse(rank=rank, mode=mode, index=graph.index,
                                basis_size=len(basis), basis=basis)
    ResultWriter(run).emit(
        document,
        ["position", "word"],
        [[i, word] for i, word in enumerate(basis)],
        lines=[f"index {graph.index}", f"basis size {len(basis)}", *basis],
    )


@free.command('adyan')
@click.option('--n', 'n', type=int, required=True)
@click.option('--p', 'p', type=int, required=True, help='Prime')
@click.pass_obj
def adyan(run: RunConfig, n: int, p: int) -> None:
    """The word (x1^np x2^np x1^-np x2^-np)^n"""
    word = adyan_word(n, p)
    document = AdyanResponse(n=n, p=p, word=format_word(word), length=word.length)
    ResultWriter(run).emit(
        document,
        ["word", "length"],
        [[document.word, document.length]],
        lines=[document.word, f"length {document.length}"],
    )


@free.command('verbal')
@click.option('--group', 'group', required=True, help='Generators, e.g. "(1 2);(1 2 3)"')
@click.option('--words', required=True, help='Words separated by ";", e.g. "x1^2;x1 x2 x1^-1 x2^-1"')
@click.pass_obj
def verbal(run: RunConfig, group: str, words: str) -> None:
    """Verbal subgroup generated by all values of the given words"""
    fin_group = FinGroup(parse_permutation_list(group), cap=run.group_order_cap)
    parts = [part.strip() for part in words.split(";")]
    if not all(parts):
        raise ParseError("expected words separated by ';'", words)
    parsed = [parse_word(part) for part in parts]
    subgroup = verbal_subgroup(fin_group, parsed, run.enumeration_cap)
    elements = [format_permutation(e) for e in subgroup.elements]
    document = VerbalResponse(group_order=fin_group.order, order=subgroup.order,
                              normal=subgroup.is_normal_in(fin_group), elements=elements)
    ResultWriter(run).emit(
        document,
        ["element"],
        [[e] for e in elements],
        lines=[f"order {subgroup.order}", *elements],
    )
