#include <stdio.h>

int main(void)
{
    char line[64];
    printf("name? ");
    if (fgets(line, sizeof line, stdin) != NULL)
        printf("hello %s", line);
    return 0;
}
