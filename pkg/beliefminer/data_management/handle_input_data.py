import json
from pathlib import Path

from .dataset import Dataset
from .utilities import check_input_data_consistency, ingest
import logging

log = logging.getLogger(__name__)


class DataHandle:
    """
    Data Handle for loading the input data of a mining case.

    A case folder contains the mining configuration (ConfigMining.json) and the
    dataset, either as a timeseries (Timeseries.csv) or as a database
    (Database.txt), depending on the configured mode.

    :param Path data_path: Container data_path
    :param dict mining_config: Container for the mining configuration
    :param Dataset dataset: Container for the dataset
    """

    def __init__(self):
        """
        Constructor
        """
        self.data_path = Path()
        self.mining_config = {}
        self.dataset = None

    def set_settings(self, data_path: Path | str):
        """
        Sets the case folder and checks its consistency

        :param Path data_path: Path to read input data from
        """
        if isinstance(data_path, str):
            data_path = Path(data_path)

        self.data_path = data_path

        check_input_data_consistency(data_path)

    def read_data(self):
        """
        Reads all data from folder
        """
        log.info(f"Reading data from {self.data_path}")
        self._read_mining_config()
        self._read_dataset()

    def _read_mining_config(self):
        """
        Reads the mining configuration
        """
        with open(self.data_path / "ConfigMining.json") as json_file:
            self.mining_config = json.load(json_file)

    def _read_dataset(self):
        """
        Reads the dataset in the configured mode
        """
        mode = self.mining_config["mining"]["mode"]["value"]
        file_name = "Timeseries.csv" if mode == "timeseries" else "Database.txt"
        self.dataset = ingest(self.data_path / file_name, mode)

        log_msg = f"Dataset read: {self.dataset.size} items in {mode} mode"
        log.info(log_msg)

    def set_mining_config(self, mining_config: dict):
        """
        Replaces the mining configuration, e.g. for runs without a case folder

        :param dict mining_config: configuration as created by
            initialize_configuration_templates
        """
        self.mining_config = mining_config

    def set_dataset(self, dataset: Dataset):
        """
        Replaces the dataset, e.g. with generated data

        :param Dataset dataset: dataset to use
        """
        self.dataset = dataset
