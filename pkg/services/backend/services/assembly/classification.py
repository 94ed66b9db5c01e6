"""
Per-(n, m) classification: addable classes, maximal cliques, assembled sets
and the largest total, cross-checked against the reference rows.
"""
from pathlib import Path
from typing import Optional

import structlog

from core.config import Settings, get_settings
from schemas.reports import ClassEntry, ClassificationReport, EnumerationReport
from services.classes import CandidateClass, format_class, m_value, sort_classes
from services.search import addable_breakdown, enumerate_addable_classes
from utils.cache import ResultCache

from .assembler import assemble, distinct_cliques
from .graph import build_graph
from .reference import compare_report
from .report import write_points

logger = structlog.get_logger()


def class_entry(X: CandidateClass) -> ClassEntry:
    return ClassEntry(notation=format_class(X), m_value=str(m_value(X)), size=X.size, reduced=X.is_reduced)


def enumerate_report(n: int, m: int, expanded: bool = False, threads: int = 1) -> EnumerationReport:
    """
    Addable classes for (n, m), one per block-permutation orbit.

    Args:
        expanded: Include the classes obtained from reduced ones by undoing
            modification, not only the reduced classes
    """
    breakdown = addable_breakdown(n, m, threads)
    classes = breakdown.all_classes if expanded else breakdown.reduced
    listed = sort_classes(X.orbit_representative() for X in classes)
    return EnumerationReport(
        n=n,
        m=m,
        maximal=breakdown.hamming_is_maximal,
        expanded=expanded,
        classes=[class_entry(X) for X in listed],
    )


def _cache_params(settings: Settings, expanded: bool) -> dict:
    return {
        "verify": settings.verify,
        "clique_budget": settings.clique_budget,
        "exact_clique_cap": settings.exact_clique_cap,
        "budgeted_clique_cap": settings.budgeted_clique_cap,
        "conflict_union_cap": settings.conflict_union_cap,
        "sample_pairs": settings.sample_pairs,
        "seed": settings.seed,
        "expanded": expanded,
    }


def classify(
    n: int,
    m: int,
    settings: Optional[Settings] = None,
    expanded: bool = False,
    cache: Optional[ResultCache] = None,
    emit_points: Optional[Path] = None,
) -> ClassificationReport:
    """
    Classify the maximal m-distance sets assembled around H(n, m).

    Args:
        n: Alphabet size
        m: Word length
        settings: Optional settings override
        expanded: List every block-position variant instead of one class per orbit
        cache: Optional result cache; hits skip the whole computation
        emit_points: Directory for one point-set file per assembled set;
            bypasses cache reads since the points are not cached

    Returns:
        ClassificationReport with verified assembled sets
    """
    settings = settings or get_settings()
    params = _cache_params(settings, expanded)
    if cache is not None and emit_points is None:
        cached = cache.get("classify", {"n": n, "m": m}, params)
        if cached is not None:
            return ClassificationReport.model_validate(cached)

    classes = enumerate_addable_classes(n, m, settings.threads)
    if not classes:
        report = ClassificationReport(n=n, m=m, maximal=True, largest_total=n ** m)
    else:
        graph = build_graph(n, m, classes, settings.threads)
        cliques = distinct_cliques(graph)
        listed = classes if expanded else sort_classes(X.orbit_representative() for X in classes)
        assembled = assemble(n, m, settings, graph=graph)
        report = ClassificationReport(
            n=n,
            m=m,
            maximal=False,
            classes=[class_entry(X) for X in listed],
            cliques=[[format_class(graph.vertices[i]) for i in clique] for clique in cliques],
            assembled=[s.to_report() for s in assembled],
            largest_total=max(s.total_with_hamming for s in assembled),
        )
        if emit_points is not None:
            for index, s in enumerate(assembled):
                write_points(Path(emit_points) / f"points_n{n}_m{m}_{index}.json", n, m, s.points)

    mismatches, notes = compare_report(report)
    report.notes.extend(notes)
    report.mismatches = mismatches
    logger.info("classified", n=n, m=m, maximal=report.maximal, classes=len(report.classes),
                cliques=len(report.cliques), largest_total=report.largest_total)

    if cache is not None:
        cache.set("classify", {"n": n, "m": m}, report.model_dump(mode="json"), params)
    return report
