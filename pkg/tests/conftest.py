from datetime import date

import pytest

from rtv.corpus import Corpus, PaperRecord
from rtv.corpus.model import assign_ids


def make_record(title, authors, abstract, pub_date, citations, venue, fields):
    return PaperRecord(
        id="",
        title=title,
        authors=tuple(authors),
        abstract=abstract,
        pub_date=pub_date,
        citation_count=citations,
        venue=venue,
        fields_of_study=tuple(fields),
    )


FIXTURE_ROWS = [
    ("Alpha", ["A", "B"], "deep learning speech", date(2019, 3, 1), 10, "V1", ["CS"]),
    ("Beta", ["A", "C"], "speech recognition model", date(2019, 7, 15), 5, "V1", ["CS", "Med"]),
    ("Gamma", ["B", "C", "D"], "clinical speech data", date(2020, 1, 10), 8, "V2", ["Med"]),
    ("Delta", ["A"], "model of learning", date(2020, 6, 1), 2, "V2", ["CS"]),
    ("Epsilon", ["C", "D"], "deep model", date(2021, 2, 20), 0, "V3", ["Psy"]),
]

FIXTURE_CSV = b"""title,authors,abstract,date,citations,venue,fields
Alpha,A;B,deep learning speech,2019-03-01,10,V1,CS
Beta,A;C,speech recognition model,2019-07-15,5,V1,CS;Med
Gamma,B;C;D,clinical speech data,2020-01-10,8,V2,Med
Delta,A,model of learning,2020-06-01,2,V2,CS
Epsilon,C;D,deep model,2021-02-20,0,V3,Psy
"""


@pytest.fixture(scope="session")
def fixture_records():
    return assign_ids([make_record(*row) for row in FIXTURE_ROWS])


@pytest.fixture(scope="session")
def fixture_corpus(fixture_records):
    return Corpus(records=tuple(fixture_records), source_label="fixture-a")


@pytest.fixture(scope="session")
def fixture_csv_bytes():
    return FIXTURE_CSV
