import json
from pathlib import Path

import pytest

from scfgkit.grammar import parse_grammar_text

DATA = Path(__file__).parent / "data"

# The paired grammar used throughout the docs: English-like source,
# Japanese-like target with an SOV order and a silent definite article.
FIG1_TEXT = """\
S -> <NP_SUBJ VP, NP_SUBJ VP>
NP_SUBJ -> <PRON, PRON>
NP_SUBJ -> <DP, DP>
DP -> <D NP, D NP>
NP -> <N, N>
VP -> <V DP, DP V>
VP -> <V, V>
PRON -> <'I', 'watashi wa'>
D -> <'the', '∅_def'>
N -> <'box', 'hako wo'>
V -> <'open', 'akemasu'>
"""


@pytest.fixture(scope="session")
def fig1_grammar():
    return parse_grammar_text(FIG1_TEXT)


@pytest.fixture(scope="session")
def appendix_text():
    return (DATA / "appendix_grammar.scfg").read_text("utf-8")


@pytest.fixture(scope="session")
def appendix_grammar(appendix_text):
    return parse_grammar_text(appendix_text)


@pytest.fixture(scope="session")
def appendix_prompt():
    return (DATA / "appendix_prompt.txt").read_text("utf-8")


@pytest.fixture(scope="session")
def metric_fixtures():
    return json.loads((DATA / "metric_fixtures.json").read_text("utf-8"))
