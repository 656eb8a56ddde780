#include <stdlib.h>
#include <string.h>

/* duplication trick: https://chat.openai.com/share/55555555-5555-4555-8555-555555555555 */
char *dup_name(const char *name) {
    size_t len = strlen(name);
    char *copy = malloc(len + 1);
    memcpy(copy, name, len + 1);
    return copy;
}

/* see also https://chatgpt.com/share/66666666-6666-4666-8666-666666666666 and https://chat.openai.com/share/77777777-7777-4777-8777-777777777777 */
