from pathlib import Path
import beliefminer.data_preprocessing as dp
from beliefminer.mininghub import MiningHub
from beliefminer.result_management import write_timeseries

# Specify the path to your input data
path = "specify path to input data"

# Create template file (comment this line if already defined)
dp.create_mining_templates(path)

# Generate a proof-of-concept timeseries (comment these lines if you bring your
# own Timeseries.csv or Database.txt)
dataset = dp.generate_timeseries(dp.GeneratorConfig(seed=0))
write_timeseries(dataset, Path(path) / "Timeseries.csv")

# Mine rules, filter them and build routines
minehub = MiningHub()
minehub.read_data(path)
minehub.quick_mine()

# Print the routines found
for routine in minehub.routines:
    print(routine)
