#!/usr/bin/env python3
# solution from https://chat.openai.com/share/bbbbbbbb-bbbb-4bbb-8bbb-bbbbbbbbbbbb
print('alpha')
