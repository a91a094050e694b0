import os

# keep test runs from writing log files into the working tree
os.environ.setdefault("QJF_LOG_FILE", "false")
