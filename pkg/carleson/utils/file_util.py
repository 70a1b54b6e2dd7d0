import csv
import json

import yaml


def is_json_file(file_path):
    try:
        with open(file_path, newline='') as jsonfile:
            json.loads(jsonfile.read())
            return True
    except ValueError:
        return False


def is_yaml_file(file_path):
    try:
        with open(file_path, newline='') as yamlfile:
            content = yaml.safe_load(yamlfile)
            # plain scalars are valid YAML too, a config needs a mapping or a list
            return isinstance(content, (dict, list))
    except yaml.YAMLError:
        return False


def is_csv_file(file_path):
    with open(file_path, newline='') as csvfile:
        try:
            sample = csvfile.read(1024)
            if not sample:
                return False
            csv.Sniffer().sniff(sample, delimiters=',;\t')
            return True
        except csv.Error:
            # File appears not to be in CSV format; move along
            return False


def load_json_file(file_path):
    with open(file_path, 'r') as json_file:
        return json.loads(json_file.read())


def load_yaml_file(file_path):
    with open(file_path, 'r') as yaml_file:
        return yaml.safe_load(yaml_file)
