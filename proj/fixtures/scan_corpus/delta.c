/* overlong: https://chat.openai.com/share/ffffffff-ffff-4fff-8fff-fffffffffffff */
int delta;
