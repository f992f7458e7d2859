import pytest

from taxsim import FrequencyTable, Taxonomy, build_model

from helpers import (
    COIN_COUNTS,
    COIN_EDGES,
    COIN_SENSES,
    DRUG_COUNTS,
    DRUG_EDGES,
    DRUG_SENSES,
    TOY_COUNTS,
    TOY_EDGES,
    TOY_SENSES,
)


@pytest.fixture(scope="session")
def toy_taxonomy():
    return Taxonomy.build(TOY_EDGES, TOY_SENSES)


@pytest.fixture(scope="session")
def toy_model(toy_taxonomy):
    return build_model(toy_taxonomy, FrequencyTable.from_counts(TOY_COUNTS))


@pytest.fixture(scope="session")
def coin_taxonomy():
    return Taxonomy.build(COIN_EDGES, COIN_SENSES)


@pytest.fixture(scope="session")
def coin_model(coin_taxonomy):
    return build_model(coin_taxonomy, FrequencyTable.from_counts(COIN_COUNTS))


@pytest.fixture(scope="session")
def drug_taxonomy():
    return Taxonomy.build(DRUG_EDGES, DRUG_SENSES)


@pytest.fixture(scope="session")
def drug_model(drug_taxonomy):
    return build_model(drug_taxonomy, FrequencyTable.from_counts(DRUG_COUNTS))


@pytest.fixture
def toy_files(tmp_path):
    """Toy taxonomy/lexicon/counts/benchmark written as input files."""
    paths = {
        "taxonomy": tmp_path / "taxonomy.tsv",
        "lexicon": tmp_path / "lexicon.tsv",
        "counts": tmp_path / "counts.tsv",
        "benchmark": tmp_path / "benchmark.csv",
    }
    paths["taxonomy"].write_text(
        "".join(f"{c}\t{p}\n" for c, p in TOY_EDGES), encoding="utf-8"
    )
    paths["lexicon"].write_text(
        "".join(
            f"{w}\t{c}\n" for w, cs in sorted(TOY_SENSES.items()) for c in sorted(cs)
        ),
        encoding="utf-8",
    )
    paths["counts"].write_text(
        "".join(f"{w}\t{n}\n" for w, n in sorted(TOY_COUNTS.items())),
        encoding="utf-8",
    )
    paths["benchmark"].write_text(
        "word1,word2,rating\nx,y,3.5\nx,z,0.5\nx,unlisted,1.0\n", encoding="utf-8"
    )
    return paths
