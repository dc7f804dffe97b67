"""注释投射服务"""
from src.services.projection.root import resolve_root, RootResolution, RootCase, source_root_position
from src.services.projection.projector import (
    Provenance,
    ProjectionOptions,
    ProjectionInput,
    ProjectionResult,
    ProjectionOutcome,
    SentenceReport,
    SentenceFailure,
    project_sentence,
    project_treebank,
    build_graph,
)
from src.services.projection.provenance import (
    ProvenanceMap,
    format_sentence_report,
    parse_sentence_report,
    format_provenance,
    parse_provenance,
    read_provenance,
    write_provenance,
    format_failures,
    write_failures,
)
from src.services.projection.targets import parse_target_sentences, read_target_sentences

__all__ = [
    'resolve_root',
    'RootResolution',
    'RootCase',
    'source_root_position',
    'Provenance',
    'ProjectionOptions',
    'ProjectionInput',
    'ProjectionResult',
    'ProjectionOutcome',
    'SentenceReport',
    'SentenceFailure',
    'project_sentence',
    'project_treebank',
    'build_graph',
    'ProvenanceMap',
    'format_sentence_report',
    'parse_sentence_report',
    'format_provenance',
    'parse_provenance',
    'read_provenance',
    'write_provenance',
    'format_failures',
    'write_failures',
    'parse_target_sentences',
    'read_target_sentences',
]
