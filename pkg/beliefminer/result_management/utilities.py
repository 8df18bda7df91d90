import datetime
import os
from pathlib import Path


def create_unique_folder_name(path: Path, name: str) -> Path:
    """
    Creates a unique folder name, in case the specified name already exists in the
    given path.

    The unique folder name is either the given folder name if the folder name did
    not exist yet in the given path, or the given folder name with an added suffix
    (_1, _2, _3, etc.).

    :param Path path: path to check
    :param str name: folder name
    :return: path to the folder with the unique folder name
    :rtype: Path
    """
    folder_path = Path.joinpath(Path(path), name)
    base_name = folder_path.name
    counter = 1
    while folder_path.is_dir():
        folder_path = folder_path.with_name(f"{base_name}_{counter}")
        counter += 1
    return folder_path


def create_save_folder(save_path: Path):
    """
    Creates a new folder at save_path

    :param Path save_path: path at which the folder is created
    """
    os.makedirs(save_path)


def result_folder_name(case_name, time_stamp: float) -> str:
    """
    Name of a results folder: the time stamp, followed by the case name if one is
    configured (-1 means no case name)

    :param case_name: case name or -1
    :param float time_stamp: POSIX time stamp of the run
    :return: folder name
    :rtype: str
    """
    folder_name = datetime.datetime.fromtimestamp(time_stamp).strftime("%Y%m%d%H%M%S")
    if case_name != -1 and case_name not in (None, ""):
        folder_name = folder_name + "_" + str(case_name)
    return folder_name
