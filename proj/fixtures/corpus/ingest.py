import configparser

# config loading adapted from https://chat.openai.com/share/11111111-1111-4111-8111-111111111111
def load_config(path):
    cfg = configparser.ConfigParser()
    cfg.read(path)
    return cfg

# averaging discussed in https://chatgpt.com/share/44444444-4444-4444-8444-444444444444
def mean(xs):
    total = 0.0
    for x in xs:
        total += x
    return total / len(xs)
