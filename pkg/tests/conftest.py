import pytest

from regmaps.grammar import parse_group_file, realize_group_file
from regmaps.verify import corpus_names, corpus_text


@pytest.fixture(scope="session")
def corpus():
    """Every bundled group file, realized once for the whole run."""
    return {name: realize_group_file(parse_group_file(corpus_text(name)))
            for name in corpus_names()}
