import pytest

from beliefminer.data_management import (
    DataFormatError,
    DataHandle,
    Dataset,
    Event,
    Record,
    check_input_data_consistency,
    ingest,
    parse_database,
    parse_timeseries,
)
from beliefminer.data_preprocessing import GeneratorConfig, generate_timeseries
from beliefminer.result_management import write_database, write_timeseries
from tests.utilities import make_database


@pytest.mark.data_management
def test_data_handle_reading(request):
    """
    Tests standard behavior of DataHandle Class
    - reads in the configuration and the timeseries of the case folder
    """
    case_study_folder_path = request.config.case_study_folder_path

    dh = DataHandle()
    dh.set_settings(case_study_folder_path)
    dh.read_data()

    assert dh.mining_config["mining"]["mode"]["value"] == "timeseries"
    assert dh.dataset.mode == "timeseries"
    assert dh.dataset.size == 330


@pytest.mark.data_management
def test_data_handle_missing_files(request):
    """
    Tests that incomplete case folders are reported
    """
    data_folder_path = request.config.data_folder_path
    with pytest.raises(FileNotFoundError):
        DataHandle().set_settings(data_folder_path / "missing")
    with pytest.raises(FileNotFoundError):
        check_input_data_consistency(data_folder_path)


@pytest.mark.data_management
def test_parse_timeseries():
    """
    Tests parse_timeseries
    - header and two events
    - comments and blank lines are skipped
    - integer symbols and time stamps are converted
    - an entity column tags events
    """
    dataset = parse_timeseries("t,symbol\n0,a\n1,b")
    assert dataset.symbols == ["a", "b"]
    assert dataset.size == 2

    dataset = parse_timeseries("# generated\nt,symbol\n\n0,10\n// note\n2.5,11\n")
    assert dataset.symbols == [10, 11]
    assert [e.t for e in dataset.events] == [0.0, 2.5]

    dataset = parse_timeseries("t,symbol,entity\n0,a,A\n0,b,B\n1,c,A\n")
    assert dataset.entities() == ["A", "B"]
    assert dataset.symbols == ["a", "c", "b"]
    assert dataset.segments() == [(0, 2), (2, 3)]


@pytest.mark.data_management
def test_parse_timeseries_errors():
    """
    Tests parse errors of timeseries files
    - no events
    - time stamps out of order, with the offending line
    - missing columns and non-numeric time stamps
    """
    with pytest.raises(DataFormatError) as err:
        parse_timeseries("t,symbol\n")
    assert err.value.category == "E_EMPTY"

    with pytest.raises(DataFormatError) as err:
        parse_timeseries("t,symbol\n0,a\n2,b\n1,c\n")
    assert err.value.category == "E_UNSORTED"
    assert err.value.line_number == 4
    assert str(err.value).startswith("line 4: ")

    with pytest.raises(DataFormatError) as err:
        parse_timeseries("time,value\n0,a\n")
    assert err.value.category == "E_FORMAT"

    with pytest.raises(DataFormatError) as err:
        parse_timeseries("t,symbol\nnow,a\n")
    assert err.value.category == "E_FORMAT"
    assert err.value.line_number == 2


@pytest.mark.data_management
def test_parse_database():
    """
    Tests parse_database
    - one record per line
    - entity tags
    - duplicate symbols, also after integer coercion, and empty files are errors
    """
    dataset = parse_database("a,b\nb\n# comment\nc, d\n")
    assert [r.symbols for r in dataset.records] == [("a", "b"), ("b",), ("c", "d")]

    dataset = parse_database("P1: 1,2\nP2: 2\n")
    assert dataset.records == [Record((1, 2), "P1"), Record((2,), "P2")]
    assert dataset.entities() == ["P1", "P2"]

    with pytest.raises(DataFormatError) as err:
        parse_database("a,b\na,b,a\n")
    assert err.value.category == "E_DUPLICATE"
    assert err.value.line_number == 2

    for text, line_number in (("a1: 1,01\n2,3\n", 1), ("2,3\n1,+1\n", 2)):
        with pytest.raises(DataFormatError) as err:
            parse_database(text)
        assert err.value.category == "E_DUPLICATE"
        assert err.value.line_number == line_number

    with pytest.raises(DataFormatError) as err:
        parse_database("# nothing\n\n")
    assert err.value.category == "E_EMPTY"

    with pytest.raises(DataFormatError) as err:
        parse_database("a,,b\n")
    assert err.value.category == "E_FORMAT"


@pytest.mark.data_management
def test_write_and_ingest(request):
    """
    Tests that written timeseries and databases are read back unchanged, footers
    included
    """
    data_folder_path = request.config.data_folder_path

    stream = generate_timeseries(GeneratorConfig(n_random=40, n_chains=2), "A")
    path = data_folder_path / "Timeseries.csv"
    write_timeseries(stream, path, metadata={"seed": 0})
    assert ingest(path, "timeseries") == stream

    database = Dataset.from_records([Record(("a", "b"), "P1"), Record(("c",), "P2")])
    path = data_folder_path / "Database.txt"
    write_database(database, path)
    assert ingest(path, "database") == database

    with pytest.raises(FileNotFoundError):
        ingest(data_folder_path / "missing.csv", "timeseries")
    with pytest.raises(ValueError):
        ingest(path, "graph")


@pytest.mark.data_management
def test_dataset_entities():
    """
    Tests entity handling of datasets
    - events are grouped per entity, each entity its own segment
    - excluding an entity removes all of its data
    - empty datasets and unsorted entities are rejected
    """
    events = [Event("a", 0, "A"), Event("b", 0, "B"), Event("c", 1, "A")]
    dataset = Dataset("timeseries", events=events)
    assert dataset.segments() == [(0, 2), (2, 3)]

    reduced = dataset.exclude_entity("A")
    assert reduced.symbols == ["b"]
    assert reduced.entities() == ["B"]

    database = make_database([("a",), ("b",)], entity="P1")
    assert database.entities() == ["P1"]
    with pytest.raises(ValueError):
        database.exclude_entity("P1")

    with pytest.raises(ValueError):
        Dataset("timeseries", events=[Event("a", 2, "A"), Event("b", 1, "A")])
    with pytest.raises(ValueError):
        Dataset.from_symbols([])
    with pytest.raises(ValueError):
        Record(("a", "a"))
