import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ellipsis_coherence.coherence import KnowledgeBase  # noqa: E402
from ellipsis_coherence.grammar import Lexicon  # noqa: E402
from ellipsis_coherence.harness import data_path, load_corpus  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def lexicon():
    return Lexicon.load(data_path("lexicon.tsv"))


@pytest.fixture(scope="session")
def kb():
    return KnowledgeBase.load(data_path("kb.txt"))


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(data_path("corpus.jsonl"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
