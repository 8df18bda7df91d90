from .dataset import Dataset, Event, Record, TIMESERIES, DATABASE
from .handle_input_data import DataHandle
from .utilities import (
    DataFormatError,
    check_input_data_consistency,
    ingest,
    parse_database,
    parse_timeseries,
)
